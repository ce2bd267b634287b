import math
import random
from fractions import Fraction

import pytest

from cfspectra.dimension import (C0, certify_blocks, d_asymptotic, d_upper,
                                 lambert_inv, moran_bracket, thm2_bound)
from cfspectra.errors import DomainError, EmptyLanguage
from cfspectra.lang import parse_threshold
from cfspectra.surd import QuadSurd


def test_single_block_degenerate():
    b = moran_bracket(["2"])
    assert b.lower == 0.0 and b.upper <= 1e-5
    # the block "1" has |I| = 1/2, the upper condition degenerates to the cap
    b = moran_bracket(["1"])
    assert b.lower == 0.0 and b.upper == 1.0


def test_full_language_brackets_nested():
    b4 = moran_bracket(["1", "2"], level=4)
    b8 = moran_bracket(["1", "2"], level=8)
    assert b4.lower <= b8.lower <= 0.5313 <= b8.upper <= b4.upper
    assert b8.word_count == 256 and b8.level == 8


def test_moran_guards():
    with pytest.raises(EmptyLanguage):
        moran_bracket([])
    with pytest.raises(DomainError):
        moran_bracket(["1", "22"])
    with pytest.raises(DomainError):
        moran_bracket(["12", "21"], level=5)


def test_certify_blocks_examples():
    assert certify_blocks(["2211"], Fraction(3))
    assert not certify_blocks(["1122", "2211"], Fraction(3))
    s8 = QuadSurd(0, 1, 1, 8)
    assert certify_blocks(["2"], s8)
    assert not certify_blocks(["2"], s8 - Fraction(1, 10 ** 9))


def test_certified_blocks_give_lower_bounds():
    # a certified sub-system's doubled lower root stays below the language cap
    assert certify_blocks(["2211", "2121"[::-1]], parse_threshold("sqrt(12)"))
    b = moran_bracket(["2211", "1212"])
    assert 0.0 <= 2 * b.lower <= 1.0


def test_lambert_inv():
    assert lambert_inv(0.0) == 0.0
    assert abs(lambert_inv(math.e) - 1.0) < 1e-12
    rng = random.Random(51)
    for _ in range(100):
        y = rng.uniform(0, 1e6)
        x = lambert_inv(y)
        assert abs(x * math.exp(x) - y) <= 1e-12 * max(1.0, y)
    # negative branch down to -1/e
    y = -math.exp(-1) + 1e-9
    x = lambert_inv(y)
    assert abs(x * math.exp(x) - y) <= 1e-10
    with pytest.raises(DomainError):
        lambert_inv(-1.0)


def test_lambert_against_scipy():
    scipy = pytest.importorskip("scipy.special")
    for y in (0.5, 3.0, 100.0, 1e5):
        assert abs(lambert_inv(y) - float(scipy.lambertw(y).real)) < 1e-9


def test_d_asymptotic_identity_and_monotonicity():
    rng = random.Random(52)
    for _ in range(30):
        rho = math.exp(-rng.uniform(8, 150))
        L = abs(math.log(rho))
        assert abs(d_asymptotic(rho) * L / 2 - lambert_inv(math.exp(C0) * L)) < 1e-9
    vals = [d_asymptotic(6.0 ** (-3 * n)) for n in range(2, 30)]
    assert all(b < a for a, b in zip(vals, vals[1:]))
    with pytest.raises(DomainError):
        d_asymptotic(1.5)


def test_thm2_bound():
    v = thm2_bound(math.exp(-100), 0.0)
    assert abs(v - (math.log(100) - math.log(math.log(100))) / 100) < 1e-15
    assert abs(v - 0.0307793) <= 1e-6
    # C enters linearly with weight 1/|log rho|
    assert abs((thm2_bound(math.exp(-100), 2.0) - v) - 2.0 / 100) < 1e-12
    with pytest.raises(DomainError):
        thm2_bound(0.9, 0.0)  # |log rho| < e


def test_d_upper_cap_and_small_grid():
    assert d_upper(parse_threshold("sqrt(12)"), 8) == 1.0
    a = d_upper(parse_threshold("3+6^-6"), 8)
    b = d_upper(parse_threshold("3+6^-9"), 8)
    assert 0 < b <= a <= 1.0
