import random
from fractions import Fraction

import pytest

from cfspectra.surd import QuadSurd, SurdSum, extract_square


def test_extract_square():
    assert extract_square(8) == (2, 2)
    assert extract_square(49) == (7, 1)
    assert extract_square(221) == (1, 221)
    assert extract_square(0) == (0, 1)


def test_canonical_forms():
    assert QuadSurd(2, 2, 4, 5).p == 1
    s = QuadSurd(0, 1, 1, 8)
    assert (s.q, s.d) == (2, 2)  # sqrt8 = 2 sqrt2
    assert QuadSurd(3, 0, 1, 7).d == 0
    assert str(QuadSurd(0, 1, 5, 221)) == "√221/5"
    assert str(QuadSurd(-1, 1, 2, 5)) == "(-1+√5)/2"
    assert str(QuadSurd(1, 1, 1, 2)) == "1+√2"


def test_equalities_across_representations():
    assert QuadSurd(0, 1, 1, 8) == QuadSurd(0, 2, 1, 2)
    assert SurdSum({8: 1}) == SurdSum({2: 2})
    assert SurdSum({12: 1}) == SurdSum({3: 2})
    assert QuadSurd(0, 1, 1, 5) != QuadSurd(0, 1, 1, 2)


def test_arithmetic_and_division():
    g = QuadSurd(-1, 1, 2, 5)       # (sqrt5 - 1)/2
    assert g * g + g == 1           # golden identity x^2 + x = 1
    s = QuadSurd(-1, 1, 1, 2)       # sqrt2 - 1
    assert 1 / (2 + s) == s
    mixed = g + s
    assert isinstance(mixed, SurdSum)
    assert mixed == SurdSum({1: Fraction(-3, 2), 5: Fraction(1, 2), 2: 1})
    assert (mixed - g) == s.to_sum()
    quot = mixed / SurdSum({2: 1})
    assert quot * SurdSum({2: 1}) == mixed


def test_total_order_trichotomy():
    rng = random.Random(11)
    vals = []
    for _ in range(40):
        p = rng.randrange(-9, 10)
        q = rng.randrange(-5, 6)
        r = rng.randrange(1, 9)
        d = rng.choice((0, 2, 3, 5, 8, 221))
        vals.append(QuadSurd(p, q, r, d).to_sum())
    for a in vals[:20]:
        for b in vals[20:]:
            signs = [(a - b).sign() == 0, a < b, a > b]
            assert sum(signs) == 1


def test_sign_of_multi_radical_sums():
    # sqrt2 + sqrt3 vs sqrt5 + tiny: classic near-tie decided exactly
    a = SurdSum({2: 1, 3: 1})
    b = SurdSum({5: 1, 1: Fraction(9, 10)})
    assert a > SurdSum({5: 1})
    assert (a - b).sign() == (1 if float(a) > float(b) else -1)
    assert SurdSum({2: 1, 8: -Fraction(1, 2)}).sign() == 0


def test_decimal_shadow():
    v = QuadSurd(0, 1, 5, 221)
    assert v.decimal(7).startswith("2.9732137")
    assert abs(float(v) - 2.97321374946) < 1e-9


def test_pow():
    s = SurdSum({2: 1, 1: 1})
    assert s ** 2 == SurdSum({1: 3, 2: 2})
    assert s ** 0 == 1
