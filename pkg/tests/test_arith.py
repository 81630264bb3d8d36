import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from torustunnels.arith import (
    NotAKnotError,
    SimpleSlope,
    UnknotError,
    cf_expand,
    cf_value,
    coprime_pairs,
    egcd,
    gcd,
    mod_inverse,
    normalize_params,
)


def test_gcd_examples():
    assert gcd(41, 29) == 1
    assert gcd(12, 8) == 4
    assert gcd(0, 5) == 5
    assert gcd(0, 0) == 0


def test_egcd_bezout_small():
    g, x, y = egcd(48, 181)
    assert g == 1
    assert 48 * x + 181 * y == 1


@given(st.integers(min_value=0, max_value=10**12), st.integers(min_value=0, max_value=10**12))
def test_egcd_bezout_random(a, b):
    g, x, y = egcd(a, b)
    assert g == math.gcd(a, b)
    assert a * x + b * y == g


def test_cf_expand_examples():
    assert cf_expand(41, 29) == [1, 2, 2, 2, 2]
    assert cf_expand(181, 48) == [3, 1, 3, 2, 1, 3]
    assert cf_expand(3, 2) == [1, 2]


def test_cf_expand_rejects_bad_input():
    with pytest.raises(ValueError):
        cf_expand(5, 1)
    with pytest.raises(ValueError):
        cf_expand(3, 5)
    with pytest.raises(ValueError):
        cf_expand(9, 6)


def test_cf_value_examples():
    assert cf_value([1, 2, 2, 2, 2]) == Fraction(41, 29)
    assert cf_value([3, 1, 3, 2, 1, 3]) == Fraction(181, 48)
    assert cf_value([7]) == Fraction(7, 1)
    with pytest.raises(ValueError):
        cf_value([])


def test_cf_roundtrip_sweep():
    for p, q in coprime_pairs(500):
        terms = cf_expand(p, q)
        assert all(n >= 1 for n in terms)
        assert terms[-1] >= 2
        assert cf_value(terms) == Fraction(p, q)


@given(st.integers(min_value=3, max_value=10**6), st.integers(min_value=2, max_value=10**6))
def test_cf_roundtrip_random(p, q):
    assume(p > q and math.gcd(p, q) == 1)
    terms = cf_expand(p, q)
    assert terms[-1] >= 2
    assert cf_value(terms) == Fraction(p, q)


def test_mod_inverse_examples():
    assert mod_inverse(29, 41) == 17
    assert mod_inverse(48, 181) == 132
    assert mod_inverse(1, 2) == 1


def test_mod_inverse_rejects_bad_input():
    with pytest.raises(ValueError):
        mod_inverse(2, 4)
    with pytest.raises(ValueError):
        mod_inverse(3, 1)


def test_mod_inverse_sweep():
    for p, q in coprime_pairs(500):
        inv = mod_inverse(q, p)
        assert 0 < inv < p
        assert q * inv % p == 1
        assert inv == pow(q, -1, p)


@given(st.integers(min_value=2, max_value=10**9), st.integers(min_value=1, max_value=10**9))
def test_mod_inverse_random(p, q):
    assume(math.gcd(p, q) == 1)
    assert mod_inverse(q, p) == pow(q, -1, p)


def test_normalize_examples():
    params = normalize_params(181, -48, "middle")
    assert (params.canonical_p, params.canonical_q) == (181, 48)
    assert params.negate_slopes and not params.swapped

    params = normalize_params(29, 41, "middle")
    assert (params.canonical_p, params.canonical_q) == (41, 29)
    assert params.swapped and not params.negate_slopes

    params = normalize_params(-3, -2, "middle")
    assert (params.canonical_p, params.canonical_q) == (3, 2)
    assert not params.negate_slopes


def test_normalize_no_swap_for_upper():
    params = normalize_params(7, 18, "upper")
    assert (params.canonical_p, params.canonical_q) == (7, 18)
    assert not params.swapped


def test_normalize_errors():
    with pytest.raises(NotAKnotError, match=r"gcd = 2"):
        normalize_params(4, 2, "middle")
    with pytest.raises(NotAKnotError, match=r"zero coordinate"):
        normalize_params(7, 0, "middle")
    with pytest.raises(NotAKnotError):
        normalize_params(0, 0, "middle")
    with pytest.raises(UnknotError):
        normalize_params(1, 5, "middle")
    with pytest.raises(UnknotError):
        normalize_params(5, -1, "upper")
    with pytest.raises(ValueError):
        normalize_params(5, 3, "sideways")


def test_normalize_idempotent_and_negation_invariant():
    for kind in ("middle", "upper", "lower"):
        for p, q in coprime_pairs(40):
            params = normalize_params(p, q, kind)
            again = normalize_params(params.canonical_p, params.canonical_q, kind)
            assert (again.canonical_p, again.canonical_q) == (
                params.canonical_p,
                params.canonical_q,
            )
            assert not again.negate_slopes
            negated = normalize_params(-p, -q, kind)
            assert (negated.canonical_p, negated.canonical_q) == (
                params.canonical_p,
                params.canonical_q,
            )
            assert negated.negate_slopes == params.negate_slopes


def test_simple_slope_canonicalization():
    assert SimpleSlope(-1, 7) == SimpleSlope(6, 7)
    slope = SimpleSlope(-1, 7)
    assert (slope.num, slope.den) == (6, 7)
    assert str(slope) == "[6/7]"
    assert SimpleSlope(1, -3) == SimpleSlope(2, 3)
    assert SimpleSlope(2, 6) == SimpleSlope(1, 3)
    assert SimpleSlope(10, 3) == SimpleSlope(1, 3)
    assert -SimpleSlope(1, 3) == SimpleSlope(2, 3)
    assert SimpleSlope(1, 3).fraction() == Fraction(1, 3)
    with pytest.raises(ValueError):
        SimpleSlope(1, 0)


def test_coprime_pairs_order_and_count():
    first = list(coprime_pairs(5))
    assert first == [(3, 2), (4, 3), (5, 2), (5, 3), (5, 4)]
    brute = [
        (p, q)
        for p in range(3, 31)
        for q in range(2, p)
        if math.gcd(p, q) == 1
    ]
    assert list(coprime_pairs(30)) == brute
