import json
import random
from fractions import Fraction

import pytest

from cfspectra.alphabets import alphabet_from_pair
from cfspectra.biseq import BiSeq, markov_value
from cfspectra.lang import (MembershipBudget, connecting_sequence, membership,
                            parse_threshold, sigma3_factors, sigma_enumerate)
from cfspectra.surd import QuadSurd
from cfspectra.words import Word


def test_parse_threshold():
    assert parse_threshold("3") == Fraction(3)
    assert parse_threshold("3.06") == Fraction(306, 100)
    assert parse_threshold("3+6^-18") == Fraction(3) + Fraction(1, 6 ** 18)
    s = parse_threshold("sqrt(12)")
    assert isinstance(s, QuadSurd) and s * s == 12


def test_membership_examples():
    assert membership(Word("121"), Fraction(306, 100)).verdict == "out"
    cert = membership(Word("2211"), Fraction(3))
    assert cert.verdict == "in"
    assert str(cert.witness.right_period) == "2211"  # minimal period witness
    assert cert.value == QuadSurd(0, 1, 5, 221)
    assert cert.verify()
    # the aa bb block is refuted even slightly above 3
    from cfspectra.cf import r_exponent
    w = Word("22221111")
    t = Fraction(3) + Fraction(1, 2 ** r_exponent(w))  # above 3 + e^-r
    assert membership(w, t).verdict == "out"


def test_membership_sqrt12_everything_in():
    t = parse_threshold("sqrt(12)")
    for w in ("12121", "21212", "11221"):
        assert membership(Word(w), t).verdict == "in"


def test_sigma_small():
    assert sigma_enumerate(Fraction(3), 1).word_set() == {"1", "2"}
    ls = sigma_enumerate(Fraction(3), 3)
    assert ls.word_set() == {"111", "112", "211", "122", "221", "222"}
    assert not ls.unresolved
    ls12 = sigma_enumerate(parse_threshold("sqrt(12)"), 5)
    assert len(ls12.words) == 32 and not ls12.unresolved


def test_sigma_oracle_agreement_small():
    for n in range(1, 13):
        a = sigma_enumerate(Fraction(3), n)
        b = sigma3_factors(n)
        assert a.word_set() == b.word_set()
        assert not a.unresolved


def test_sigma3_factor_examples():
    f4 = sigma3_factors(4)
    assert "2211" in f4.words and "1122" in f4.words
    assert "2121" not in f4.words


def test_language_closure_properties():
    a = sigma_enumerate(Fraction(3), 8)
    assert a.transposition_closed()
    bigger = sigma_enumerate(Fraction(3) + Fraction(1, 6 ** 6), 8)
    assert a.word_set() <= bigger.word_set()
    longer = sigma_enumerate(Fraction(3), 10)
    for w in longer.words:
        assert w[:8] in a.words and w[2:] in a.words


def test_certificates_and_serialization():
    ls = sigma_enumerate(Fraction(3), 5)
    for w, cert in ls.words.items():
        assert cert.verify()
        assert cert.witness.segment(0, 5) == w
    csv = ls.to_csv()
    assert csv.splitlines()[0] == "word,verdict,witness-period,refutation-depth"
    assert len(csv.splitlines()) == len(ls.words) + 1
    obj = json.loads(ls.to_json())
    assert obj["count"] == len(ls.words)


def test_membership_odd_run_and_slide_refutations():
    assert membership(Word("2" + "1" * 17 + "22"), Fraction(3)).verdict == "out"
    slide = "1" * 12 + "22" + "1" * 10 + "22" + "1" * 8 + "22"
    cert = membership(Word(slide), Fraction(3))
    assert cert.verdict == "out"


def test_unresolved_is_a_value():
    # a tiny budget cannot refute a long slide pattern: unresolved, not an error
    slide = "1" * 30 + "22" + "1" * 10 + "22" + "1" * 8 + "2"
    budget = MembershipBudget(max_refute_depth=0, max_frontier=2)
    cert = membership(Word(slide), Fraction(3) + Fraction(1, 6 ** 204), budget)
    assert cert.verdict in ("out", "unresolved")


def test_connecting_sequences():
    seq = connecting_sequence("ab", 3)
    assert str(seq.left_period) == "2" and str(seq.right_period) == "1"
    # middle is the concatenated Farey words a, aab, ab, abb, b
    mid = "22" + "222211" + "2211" + "221111" + "11"
    assert seq.segment(0, len(mid)) == mid
    ba = connecting_sequence("ba", 3)
    for i in range(-10, 10):
        assert ba.digit(i) == seq.digit(-1 - i)
    v, attained, _ = markov_value(seq)
    assert v > Fraction(3)

    node = alphabet_from_pair("ab", "b")
    s1 = connecting_sequence("a-to-alphabet", 2, node)
    assert str(s1.left_period) == "2"
    assert str(s1.right_period) == str(node.concat().to_word())
    s2 = connecting_sequence("alphabet-to-b", 2, node)
    assert str(s2.right_period) == "1"
    v1, _, _ = markov_value(s1)
    v2, _, _ = markov_value(s2)
    assert v1 > Fraction(3) and v2 > Fraction(3)
