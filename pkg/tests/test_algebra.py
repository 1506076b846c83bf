"""Polynomials, the quadratic extension ring and truncated series."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from core.algebra import (
    COS_LIFT, ONE, SIGMA_MINUS, SIGMA_PLUS, TAN_LIFT, XI, ZERO, ExtElem,
    FirstOrderOperator, Poly, SeriesInT, ext_apply_D, poly_divmod,
)
from core.errors import ConfigurationError, DomainError

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=12)
polys = st.lists(fractions, max_size=6).map(Poly)


def test_zero_polynomial_is_canonical():
    assert Poly([0, 0, 0]) == ZERO
    assert ZERO.degree == -math.inf
    assert Poly([1, 2, 0]).coeffs == (Fraction(1), Fraction(2))


def test_poly_arithmetic():
    assert (ONE + XI) ** 2 == Poly([1, 2, 1])
    assert (XI ** 3).derive() == Poly([0, 0, 3])
    assert Poly([1, 2, 1]) - XI * 2 == ONE + XI * XI
    assert Poly([2, 4]) / 2 == Poly([1, 2])


def test_poly_evaluate_exact_and_float():
    p = Poly([1, 0, 1])
    assert p.evaluate(Fraction(1, 2)) == Fraction(5, 4)
    assert p(3) == 10
    assert p.evaluate(0.5) == pytest.approx(1.25)
    assert p.evaluate(1j) == 0


def test_divmod():
    q, r = poly_divmod(XI * XI - 1, XI - 1)
    assert q == XI + 1
    assert r.is_zero()
    q, r = (XI ** 3 + 2).divmod(XI * XI)
    assert q == XI and r == Poly([2])


@given(polys, polys)
def test_divmod_reconstructs(p, q):
    if q.is_zero():
        return
    quotient, remainder = p.divmod(q)
    assert quotient * q + remainder == p
    assert remainder.degree < q.degree


@given(polys, polys)
def test_product_rule(p, q):
    assert (p * q).derive() == p.derive() * q + p * q.derive()


def test_compose_and_parity():
    assert (XI * XI).compose(XI + 1) == Poly([1, 2, 1])
    assert Poly([0, 2, 0, 2]).parity() == 1
    assert Poly([1, 1]).parity() is None


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert (p + q) + r == p + (q + r)
    assert p * (q + r) == p * q + p * r
    assert (p + q) * r == p * r + q * r


@pytest.mark.parametrize('sigma', [SIGMA_PLUS, SIGMA_MINUS])
def test_root_squares_to_sigma(sigma):
    s = ExtElem.root(sigma)
    assert s * s == ExtElem(sigma, ZERO, sigma)
    assert s * s == sigma


def test_mixed_rings_rejected():
    with pytest.raises(ConfigurationError):
        ExtElem.root(SIGMA_PLUS) + ExtElem.root(SIGMA_MINUS)


def test_ext_elem_is_immutable():
    e = ExtElem.root(SIGMA_PLUS)
    with pytest.raises(AttributeError):
        e.a = ONE


def test_tan_lift_on_root():
    # (1+ξ²) ∂ s = ξ s
    image = TAN_LIFT.apply(ExtElem.root(SIGMA_PLUS))
    assert image == ExtElem(ZERO, XI, SIGMA_PLUS)


def test_cos_lift_matches_cosine_derivatives():
    xi = ExtElem(XI, ZERO, SIGMA_MINUS)
    first = COS_LIFT.apply(xi)
    second = COS_LIFT.apply(first)
    assert first == ExtElem(ZERO, -ONE, SIGMA_MINUS)   # ∂ cos = −sin
    assert second == ExtElem(-XI, ZERO, SIGMA_MINUS)   # ∂² cos = −cos
    assert COS_LIFT.power(xi, 4) == xi


def test_operator_leaving_ring_raises():
    op = FirstOrderOperator('ξ∂', ExtElem(XI, ZERO, SIGMA_MINUS), 1)
    with pytest.raises(ConfigurationError):
        op.apply(ExtElem.root(SIGMA_MINUS))
    with pytest.raises(ConfigurationError):
        ext_apply_D(ExtElem.root(SIGMA_MINUS), XI, 2)


def test_ext_evaluate_uses_signed_root():
    e = ExtElem(XI, ONE, SIGMA_MINUS)
    assert e.evaluate(0.6, -0.8) == pytest.approx(-0.2)


def test_series_inverse_and_egf():
    # 1/(1 − t) = Σ t^k, so k!·c_k = k!
    one_minus_t = SeriesInT([ONE, -ONE], 6)
    inverse = one_minus_t.inverse()
    assert all(inverse.coefficient(k) == ONE for k in range(7))
    assert inverse.egf_coefficient(4) == Poly([24])
    assert one_minus_t * inverse == SeriesInT([ONE], 6)


def test_series_needs_unit_constant():
    with pytest.raises(DomainError):
        SeriesInT.variable(4).inverse()
    with pytest.raises(DomainError):
        SeriesInT([XI, ONE], 3).inverse()


def test_series_over_extension_ring():
    one = ExtElem(ONE, ZERO, SIGMA_MINUS)
    t = SeriesInT.variable(3, one)
    square = (t * ExtElem.root(SIGMA_MINUS)) ** 2
    assert square.coefficient(2) == ExtElem(SIGMA_MINUS, ZERO, SIGMA_MINUS)
