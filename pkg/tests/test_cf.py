import random
from fractions import Fraction

import mpmath
import pytest

from cfspectra.cf import (cylinder, cylinder_length, eval_cf, extremal_tail,
                          periodic_cf_value, periodic_fixpoint, r_exponent)
from cfspectra.surd import QuadSurd, SurdSum
from cfspectra.words import Word


def brute_cf(digits):
    """Independent oracle: plain back-substitution with Fractions."""
    acc = Fraction(0)
    for d in reversed(digits):
        acc = Fraction(1, int(d) + acc)
    return acc


def random_word(rng, n):
    return "".join(rng.choice("12") for _ in range(n))


def test_eval_cf_examples():
    assert eval_cf("2") == Fraction(1, 2)
    assert eval_cf("11") == Fraction(1, 2)
    # oracle value: 1/(2 + 1/2) = 2/5
    assert eval_cf("22") == brute_cf("22") == Fraction(2, 5)


def test_eval_cf_matches_brute_force():
    rng = random.Random(1)
    for _ in range(300):
        w = random_word(rng, rng.randrange(1, 25))
        assert eval_cf(w) == brute_cf(w)


def test_cylinder_examples():
    c = cylinder("1")
    assert (c.lo, c.hi, c.length) == (Fraction(1, 2), Fraction(1), Fraction(1, 2))
    c = cylinder("11")
    assert (c.lo, c.hi, c.length) == (Fraction(1, 2), Fraction(2, 3), Fraction(1, 6))
    # continuant oracle: q = 5, q' = 2, length 1/(5*7)
    c = cylinder("22")
    assert (c.lo, c.hi, c.length) == (Fraction(2, 5), Fraction(3, 7), Fraction(1, 35))


def test_cylinder_continuant_formula():
    rng = random.Random(2)
    for _ in range(200):
        w = random_word(rng, rng.randrange(1, 30))
        c = cylinder(w)
        # endpoints are [0;w] and the evaluation with the last digit bumped
        bumped = w[:-1] + ("2" if w[-1] == "1" else "3")
        ends = sorted([brute_cf(w), brute_cf(bumped)])
        assert [c.lo, c.hi] == ends
        assert c.length == cylinder_length(w)


def test_quasi_multiplicativity():
    rng = random.Random(3)
    for _ in range(200):
        w1 = random_word(rng, rng.randrange(1, 15))
        w2 = random_word(rng, rng.randrange(1, 15))
        a, b, ab = cylinder_length(w1), cylinder_length(w2), cylinder_length(w1 + w2)
        assert a * b / 2 < ab < 2 * a * b


def test_r_exponent_examples():
    assert r_exponent("11") == 1  # 1/|I| = 6 lies in [e, e^2)
    assert r_exponent("1") == 0
    assert r_exponent("2") == 1   # 1/|I| = 6 as well


def test_r_exponent_growth_bounds():
    import math
    lo_rate = math.log((3 + math.sqrt(5)) / 2)
    hi_rate = math.log(3 + 2 * math.sqrt(2))
    rng = random.Random(4)
    for _ in range(100):
        w = random_word(rng, rng.randrange(1, 40))
        r = r_exponent(w)
        assert (len(w) - 3) * lo_rate - 1e-9 <= r <= (len(w) + 1) * hi_rate + 1e-9


def test_run_interval_closed_forms():
    # 1/|I(1^n)| follows the golden-ratio closed form exactly at index n;
    # the corresponding 2-run form is index-shifted: its value at n equals
    # 1/|I(2^(n-1))| (it gives 1 at n = 1 while 1/|I(2)| = 6).
    half = Fraction(1, 2)
    for n in range(1, 13):
        inv1 = SurdSum({1: Fraction(-1, 5) * (-1) ** (n + 1)}) \
            + (SurdSum({5: Fraction(1, 10), 1: Fraction(1, 10)})
               * (SurdSum({1: Fraction(3, 2), 5: half}) ** (n + 1))) \
            - (SurdSum({5: Fraction(1, 10), 1: Fraction(-1, 10)})
               * (SurdSum({1: Fraction(3, 2), 5: -half}) ** (n + 1)))
        assert inv1 == 1 / cylinder_length("1" * n)
        inv2 = (SurdSum({1: 3, 2: 2}) ** n - SurdSum({1: 3, 2: -2}) ** n) \
            / SurdSum({2: 4})
        if n == 1:
            assert inv2 == 1
        else:
            assert inv2 == 1 / cylinder_length("2" * (n - 1))


def test_periodic_values():
    assert periodic_fixpoint("1") == QuadSurd(-1, 1, 2, 5)
    assert periodic_fixpoint("2") == QuadSurd(-1, 1, 1, 2)
    assert periodic_cf_value("", "2", integer_part=2) == QuadSurd(1, 1, 1, 2)
    # numeric oracle at high precision
    rng = random.Random(5)
    with mpmath.workdps(60):
        for _ in range(40):
            pre = random_word(rng, rng.randrange(0, 6))
            per = random_word(rng, rng.randrange(1, 8))
            val = periodic_cf_value(pre, per)
            seq = [int(c) for c in pre + per * 40]
            acc = mpmath.mpf(0)
            for d in reversed(seq):
                acc = 1 / (d + acc)
            assert abs(float(val) - float(acc)) < 1e-12


def test_extremal_tail_examples():
    tail, val = extremal_tail("", "max")
    assert str(tail) == "12" and val == QuadSurd(-1, 1, 1, 3)
    tail, val = extremal_tail("", "min")
    assert str(tail) == "21" and val == QuadSurd(-1, 1, 2, 3)
    # one-step reciprocal monotonicity
    _, v2 = extremal_tail("2", "max")
    assert v2 == 1 / (QuadSurd(-1, 1, 2, 3) + 2)


def test_extremal_tail_dominates_random_continuations():
    rng = random.Random(6)
    for _ in range(25):
        prefix = random_word(rng, rng.randrange(0, 10))
        _, hi = extremal_tail(prefix, "max")
        _, lo = extremal_tail(prefix, "min")
        for _ in range(8):
            cont = random_word(rng, 200)
            v = brute_cf(prefix + cont)
            assert lo <= v <= hi
