import random
from fractions import Fraction

import pytest

from cfspectra.biseq import BiSeq, lambda_at, markov_value
from cfspectra.cf import eventually_periodic_value
from cfspectra.surd import QuadSurd, SurdSum
from cfspectra.words import Word


def test_lambda_examples():
    assert (lambda_at(BiSeq.periodic("2"), 0) - QuadSurd(0, 1, 1, 8)).sign() == 0
    assert (lambda_at(BiSeq.periodic("1"), 5) - QuadSurd(0, 1, 1, 5)).sign() == 0
    s = BiSeq.make("1", "", "", "2")
    expect = QuadSurd(-1, 1, 2, 5) + 1 + QuadSurd(0, 1, 1, 2)
    assert (lambda_at(s, 0) - expect).sign() == 0


def test_markov_examples_exact():
    for period, target in (("11", QuadSurd(0, 1, 1, 5)),
                           ("22", QuadSurd(0, 1, 1, 8)),
                           ("2211", QuadSurd(0, 1, 5, 221))):
        v, attained, idx = markov_value(BiSeq.periodic(period))
        assert attained and (v - target.to_sum()).sign() == 0


def test_markov_mixed_attained_at_first_two():
    s = BiSeq.make("1", "", "", "2")
    v, attained, idx = markov_value(s)
    expect = QuadSurd(-1, 1, 2, 5) + 1 + QuadSurd(0, 1, 1, 2)
    assert attained and idx == 0 and (v - SurdSum.from_value(expect)).sign() == 0


def test_boundary_markov_exactly_three():
    # a^inf b a^inf and b^inf a b^inf both sit exactly at 3
    for seq in (BiSeq.make("2", "", "11", "2"), BiSeq.make("1", "", "22", "1")):
        v, attained, _ = markov_value(seq)
        assert attained and (v - Fraction(3)).sign() == 0


def test_markov_shift_and_transpose_invariance():
    rng = random.Random(12)
    for _ in range(20):
        s = BiSeq.make("".join(rng.choice("12") for _ in range(rng.randrange(1, 5))),
                       "".join(rng.choice("12") for _ in range(rng.randrange(0, 4))),
                       "".join(rng.choice("12") for _ in range(rng.randrange(0, 4))),
                       "".join(rng.choice("12") for _ in range(rng.randrange(1, 5))))
        v, att, idx = markov_value(s)
        for k in (-3, 2, 7):
            v2, att2, idx2 = markov_value(s.shift(k))
            assert (v2 - v).sign() == 0 and att2 == att
            if att:
                assert (lambda_at(s.shift(k), idx2) - v).sign() == 0
        vt, _, _ = markov_value(s.transpose())
        assert (vt - v).sign() == 0


def test_lambda_shift_identity():
    rng = random.Random(13)
    s = BiSeq.make("21", "112", "2", "122")
    for k in (-4, -1, 0, 2, 5):
        for i in (-3, 0, 4):
            assert (lambda_at(s.shift(k), i) - lambda_at(s, i + k)).sign() == 0


def test_digit_indexing_and_segments():
    s = BiSeq.make("12", "221", "1", "211")
    assert s.segment(0, 7) == "1211211"
    assert s.segment(-5, 0) == "12221"
    t = s.transpose()
    for i in range(-8, 8):
        assert t.digit(i) == s.digit(-1 - i)


def test_three_identity():
    # [2,2,z...] + [0;1,1,z...] = 3 for every tail z
    rng = random.Random(14)
    for _ in range(30):
        z = "".join(rng.choice("12") for _ in range(rng.randrange(1, 8)))
        fwd = 2 + eventually_periodic_value("2", z)  # [2; 2, z...]

        bwd = eventually_periodic_value("11", z)
        assert (SurdSum.from_value(fwd) + bwd - Fraction(3)).sign() == 0


def test_junction_value_slightly_above_three():
    # ...2222 | 2211 2211... exceeds 3 at the second position
    s = BiSeq.make("2", "", "", "2211")
    v, att, idx = markov_value(s)
    assert v > Fraction(3)
    assert (lambda_at(s, 1) - v).sign() == 0
