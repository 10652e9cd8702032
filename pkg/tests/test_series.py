"""Exact series arithmetic: constructors, ring laws, count extraction."""

from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from euler_refine import (
    TruncatedEGF,
    cos_egf,
    edown_egf,
    egf_add,
    egf_from_counts,
    egf_mul,
    egf_reciprocal,
    ene_egf,
    enw_egf,
    eup_egf,
    euler_numbers,
    extract_counts,
    one_egf,
    sec_egf,
    sin_egf,
    tan_egf,
    zero_egf,
)

from helpers import EDOWN, ENE, ENW, EULER, EUP


def tangent_numbers(upto):
    """Odd-index counts from the boustrophedon triangle, an independent route."""
    ee = euler_numbers(upto)
    return {n: ee[n] for n in range(1, upto + 1, 2)}


def test_cos_coefficients():
    assert cos_egf(4).coeffs == (1, 0, Fraction(-1, 2), 0, Fraction(1, 24))


def test_sin_coefficients():
    assert sin_egf(3).coeffs == (0, 1, 0, Fraction(-1, 6))


def test_pythagorean_identity():
    order = 8
    c, s = cos_egf(order), sin_egf(order)
    assert c * c + s * s == one_egf(order)


def test_sec_even_counts():
    counts = extract_counts(sec_egf(8))
    assert counts[0::2] == [1, 1, 5, 61, 1385]
    assert counts[1::2] == [0, 0, 0, 0]


def test_sec_of_order_zero_is_constant_one():
    assert sec_egf(0) == one_egf(0)


def test_tan_odd_counts():
    counts = extract_counts(tan_egf(9))
    assert counts[1::2] == [1, 2, 16, 272, 7936]
    assert counts[0::2] == [0, 0, 0, 0, 0]


def test_sec_plus_tan_counts_euler_numbers():
    order = 12
    counts = extract_counts(sec_egf(order) + tan_egf(order))
    assert counts == euler_numbers(order)
    assert counts[10:] == [50521, 353792, 2702765]


def test_add_requires_equal_orders():
    with pytest.raises(ValueError, match="order mismatch"):
        egf_add(one_egf(3), one_egf(4))
    with pytest.raises(ValueError, match="order mismatch"):
        egf_mul(one_egf(3), one_egf(4))


def test_add_zero_is_identity():
    f = tan_egf(6)
    assert egf_add(f, zero_egf(6)) == f


def test_mul_one_is_identity():
    f = sec_egf(6)
    assert egf_mul(f, one_egf(6)) == f


def test_tan_plus_tan_doubles_tangent_numbers():
    doubled = extract_counts(egf_add(tan_egf(3), tan_egf(3)))
    oracle = tangent_numbers(3)
    assert doubled[1] == 2 * oracle[1] == 2
    assert doubled[3] == 2 * oracle[3] == 4


def test_tan_squared_counts():
    # Oracle: a_n(tan^2) = sum over odd i of C(n, i) T_i T_{n-i}.
    oracle = tangent_numbers(5)
    expect = {
        n: sum(
            comb(n, i) * oracle[i] * oracle[n - i]
            for i in range(1, n, 2)
            if (n - i) % 2 == 1
        )
        for n in (2, 4, 6)
    }
    assert expect == {2: 2, 4: 16, 6: 272}
    counts = extract_counts(egf_mul(tan_egf(6), tan_egf(6)))
    assert [counts[2], counts[4], counts[6]] == [2, 16, 272]


def test_reciprocal_of_cos_is_sec():
    assert egf_reciprocal(cos_egf(8)) == sec_egf(8)


def test_reciprocal_of_one_is_one():
    assert egf_reciprocal(one_egf(5)) == one_egf(5)


def test_reciprocal_is_an_involution():
    f = TruncatedEGF((Fraction(1), Fraction(1), Fraction(0), Fraction(0)))
    assert egf_reciprocal(egf_reciprocal(f)) == f


def test_reciprocal_rejects_zero_constant_term():
    with pytest.raises(ValueError, match="constant term"):
        egf_reciprocal(sin_egf(4))


def test_extract_counts_rejects_non_integral():
    f = TruncatedEGF((Fraction(1), Fraction(1, 3)))
    with pytest.raises(ValueError, match="non-integral"):
        extract_counts(f)


def test_extract_counts_of_zero_series():
    assert extract_counts(zero_egf(5)) == [0] * 6


def test_sec_squared_equals_one_plus_tan_squared_up_to_30():
    for order in (0, 1, 7, 16, 30):
        sec, tan = sec_egf(order), tan_egf(order)
        assert sec * sec == one_egf(order) + tan * tan


def test_named_series_reproduce_reference_rows():
    order = 7
    assert extract_counts(ene_egf(order)) == ENE
    assert extract_counts(enw_egf(order)) == ENW
    assert extract_counts(eup_egf(order)) == EUP
    assert extract_counts(edown_egf(order)) == EDOWN


def test_series_sum_identity():
    order = 20
    lhs = ene_egf(order) + enw_egf(order)
    rhs = eup_egf(order) + edown_egf(order)
    assert lhs == rhs


def test_egf_from_counts_round_trips():
    f = egf_from_counts(EULER)
    assert extract_counts(f) == EULER
    assert f == sec_egf(9) + tan_egf(9)


def test_json_serialization():
    f = sec_egf(4) + tan_egf(4)
    assert f.to_json_dict() == {"order": 4, "a": ["1", "1", "1", "2", "5"]}


small_rationals = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
)


def series_of_order(order):
    return st.lists(
        small_rationals, min_size=order + 1, max_size=order + 1
    ).map(lambda cs: TruncatedEGF(tuple(Fraction(c) for c in cs)))


@settings(max_examples=60)
@given(st.integers(0, 5).flatmap(lambda k: st.tuples(series_of_order(k), series_of_order(k), series_of_order(k))))
def test_ring_axioms(fgh):
    f, g, h = fgh
    assert f + g == g + f
    assert (f + g) + h == f + (g + h)
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@settings(max_examples=40)
@given(st.integers(0, 5).flatmap(series_of_order))
def test_reciprocal_inverts(f):
    if f.coeffs[0] == 0:
        with pytest.raises(ValueError):
            egf_reciprocal(f)
    else:
        assert f * egf_reciprocal(f) == one_egf(f.order)
