"""Exact Laurent-polynomial and truncated character-series arithmetic."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quasiflags.charseries import (
    BoundMismatchError,
    CharSeries,
    LaurentPoly,
    geometric_inverse,
)

polys = st.dictionaries(
    st.integers(min_value=-6, max_value=6),
    st.integers(min_value=-9, max_value=9),
    max_size=5,
).map(LaurentPoly)

vectors2 = st.tuples(
    st.integers(min_value=0, max_value=3), st.integers(min_value=0, max_value=3)
)
series2 = st.dictionaries(vectors2, polys, max_size=4).map(
    lambda d: CharSeries(2, 6, d)
)


def test_poly_basic_examples():
    one, q2 = LaurentPoly.one(), LaurentPoly.t_power(1)
    assert (one + q2) * (one - q2) == LaurentPoly.t_poly({0: 1, 2: -1})
    assert LaurentPoly({3: 1, 1: 1}).negate_exponents() == LaurentPoly({-3: 1, -1: 1})
    assert LaurentPoly.t_poly({0: 1, 1: 2, 2: 1}).eval_at_one() == 4


def test_poly_zero_coefficients_dropped():
    assert LaurentPoly({2: 0, 1: 3}).terms == {1: 3}
    assert (LaurentPoly({1: 5}) - LaurentPoly({1: 5})).is_zero()


@given(polys, polys, polys)
@settings(max_examples=60, deadline=None)
def test_poly_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(polys, polys)
@settings(max_examples=40, deadline=None)
def test_negate_exponents_is_ring_involution(a, b):
    assert a.negate_exponents().negate_exponents() == a
    assert (a * b).negate_exponents() == a.negate_exponents() * b.negate_exponents()
    assert (a + b).negate_exponents() == a.negate_exponents() + b.negate_exponents()


@given(polys)
@settings(max_examples=40, deadline=None)
def test_eval_at_one_sums_coefficients(a):
    assert a.eval_at_one() == sum(a.terms.values())


def test_poly_pretty_and_json():
    poly = LaurentPoly({-3: 1, -1: 1, 1: 1, 3: 1})
    assert poly.pretty() == "q^-3 + q^-1 + q + q^3"
    assert poly.to_json() == [[-3, "1"], [-1, "1"], [1, "1"], [3, "1"]]
    assert LaurentPoly.from_json(poly.to_json()) == poly
    assert LaurentPoly.t_poly({0: 1, 1: 1}).pretty() == "1 + t"
    assert LaurentPoly.zero().pretty() == "0"


def test_poly_parity_helpers():
    assert LaurentPoly.t_poly({0: 1, 3: 2}).is_even()
    assert not LaurentPoly({1: 1}).is_even()
    sym = LaurentPoly({-1: 2, 1: 2})
    assert sym.is_palindromic()
    assert not LaurentPoly({1: 1, 2: 1}).is_palindromic()


def test_series_monomial_product():
    e_a = CharSeries.monomial(2, 6, (1, 0), LaurentPoly.one())
    e_b = CharSeries.monomial(2, 6, (0, 2), LaurentPoly.one())
    prod = e_a * e_b
    assert prod.coefficient((1, 2)) == LaurentPoly.one()
    assert prod.support() == [(1, 2)]


def test_series_truncation_in_product():
    e = CharSeries.monomial(2, 2, (1, 1), LaurentPoly.one())
    assert (e * e).support() == []  # |(2,2)| = 4 > 2


def test_series_zero_annihilates():
    z = CharSeries.zero(2, 4)
    s = CharSeries.monomial(2, 4, (1, 0), LaurentPoly.t_power(2))
    assert (s * z) == z
    assert (z * s) == z


def test_series_difference_of_squares():
    theta = (1, 1)
    t = LaurentPoly.t_power(1)
    plus = CharSeries.one(2, 4) + CharSeries.monomial(2, 4, theta, t)
    minus = CharSeries.one(2, 4) - CharSeries.monomial(2, 4, theta, t)
    prod = plus * minus
    assert prod.coefficient((0, 0)) == LaurentPoly.one()
    assert prod.coefficient(theta).is_zero()
    assert prod.coefficient((2, 2)) == LaurentPoly.t_power(2) * -1


def test_series_bound_mismatch():
    with pytest.raises(BoundMismatchError):
        CharSeries.one(2, 4) * CharSeries.one(2, 5)
    with pytest.raises(BoundMismatchError):
        CharSeries.one(2, 4) + CharSeries.one(1, 4)


def test_geometric_inverse_examples():
    theta = (1, 1)
    t = LaurentPoly.t_power(1)
    tinv = LaurentPoly.t_power(-1)
    geo = geometric_inverse(t, theta, 4)
    assert geo.coefficient((0, 0)) == LaurentPoly.one()
    assert geo.coefficient((1, 1)) == t
    assert geo.coefficient((2, 2)) == LaurentPoly.t_power(2)

    geo_inv = geometric_inverse(tinv, theta, 2)
    assert geo_inv.coefficient((1, 1)) == tinv

    prod = (geometric_inverse(t, theta, 2) * geometric_inverse(tinv, theta, 2))
    assert prod.coefficient((1, 1)) == t + tinv


def test_geometric_inverse_rejects_zero_direction():
    with pytest.raises(ValueError):
        geometric_inverse(LaurentPoly.t_power(1), (0, 0), 4)


def test_geometric_inverse_times_factor_is_one():
    # (1 - c e^theta)^{-1} * (1 - c e^theta) == 1 up to the bound
    for coeff in (LaurentPoly.t_power(1), LaurentPoly.t_power(-1), LaurentPoly.one()):
        for theta in ((1, 0), (1, 1)):
            bound = 5
            geo = geometric_inverse(coeff, theta, bound)
            factor = CharSeries.one(2, bound) - CharSeries.monomial(
                2, bound, theta, coeff
            )
            assert geo * factor == CharSeries.one(2, bound)


@given(series2, series2)
@settings(max_examples=30, deadline=None)
def test_series_commutative(a, b):
    assert a * b == b * a


@given(series2, series2, series2)
@settings(max_examples=30, deadline=None)
def test_series_distributive(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(series2, series2)
@settings(max_examples=30, deadline=None)
def test_truncation_coherence(a, b):
    # computing at bound 6 then restricting to 3 = computing at 3 directly
    full = (a * b).truncate(3)
    direct = a.truncate(3) * b.truncate(3)
    assert full == direct


def test_series_json_sorted_by_height_then_lex():
    s = CharSeries(
        2,
        6,
        {
            (2, 0): LaurentPoly.one(),
            (0, 1): LaurentPoly.one(),
            (1, 1): LaurentPoly.t_power(1),
        },
    )
    assert [alpha for alpha, _ in s.to_json()] == [[0, 1], [1, 1], [2, 0]]


def test_series_eval_at_one():
    s = CharSeries(2, 6, {(1, 0): LaurentPoly({-1: 1, 1: 1})})
    assert s.eval_at_one() == {(1, 0): 2}
