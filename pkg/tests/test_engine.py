"""Closed-form derivative evaluators."""

import math
from fractions import Fraction

import pytest
import sympy

from core.deriv import engine
from core.errors import DomainError, SingularityError
from core.oracle import nth_derivative

X = sympy.Symbol('x')


@pytest.mark.parametrize('m', range(9))
def test_lorentz_matches_symbolic_derivative(m):
    expr = sympy.diff(1 / (1 + X ** 2), X, m)
    for x in (Fraction(0), Fraction(1, 3), Fraction(-2), Fraction(7, 5)):
        expected = sympy.Rational(expr.subs(X, sympy.Rational(x.numerator, x.denominator)))
        got = engine.d_lorentz(m, x)
        assert isinstance(got, Fraction)
        assert got == Fraction(int(expected.p), int(expected.q))


def test_lorentz_small_orders():
    assert engine.d_lorentz(0, 0) == 1
    assert engine.d_lorentz(2, 0) == -2
    assert engine.d_lorentz(1, Fraction(1)) == Fraction(-1, 2)
    assert isinstance(engine.d_lorentz(1, 0.5), float)


def test_arctan():
    assert engine.d_arctan(1, Fraction(2)) == Fraction(1, 5)
    assert engine.d_arctan(0, 1.0) == pytest.approx(math.pi / 4)
    assert engine.d_arctan(3, 0) == -2


def test_lorentz_pow_reduces_at_integer_nu():
    x = Fraction(2, 3)
    for n in range(6):
        assert engine.d_lorentz_pow(n, 1, x) == engine.d_lorentz(n, x)
    # ∂ (1+x²)^{−2} = −4x (1+x²)^{−3}
    assert engine.d_lorentz_pow(1, 2, x) == -4 * x / (1 + x * x) ** 3


def test_lorentz_pow_half_integer():
    x = 0.8
    expected = -x * (1 + x * x) ** -1.5
    assert engine.d_lorentz_pow(1, Fraction(1, 2), x) == pytest.approx(expected, rel=1e-13)


def test_arccos():
    assert engine.d_arccos(1, 0.3) == pytest.approx(-1 / math.sqrt(1 - 0.09), rel=1e-13)
    assert engine.d_arccos(2, 0.3) == pytest.approx(-0.3 * (1 - 0.09) ** -1.5, rel=1e-13)
    with pytest.raises(DomainError):
        engine.d_arccos(2, 1.0)


def test_sech_values():
    assert engine.d_sech(0, 0.0) == pytest.approx(1.0)
    assert engine.d_sech(2, 0.0) == pytest.approx(-1.0)
    x = 0.7
    sech, tanh = 1 / math.cosh(x), math.tanh(x)
    assert engine.d_sech(1, x) == pytest.approx(-sech * tanh, rel=1e-12)


def test_sech_pow_uses_falling_factorial():
    x = -0.4
    sech, tanh = 1 / math.cosh(x), math.tanh(x)
    assert engine.d_sech_pow(1, 2, x) == pytest.approx(-2 * sech ** 2 * tanh, rel=1e-12)
    assert engine.d_sech_pow(1, 2.5, x) == pytest.approx(-2.5 * sech ** 2.5 * tanh, rel=1e-12)
    for m in range(8):
        assert engine.d_sech_pow(m, 1, x) == pytest.approx(engine.d_sech(m, x), rel=1e-12)


@pytest.mark.parametrize('m', range(13))
def test_sech_family_matches_oracle(m):
    for x in (-1.0, -0.3, 0.55, 1.0):
        assert engine.d_sech(m, x) == pytest.approx(nth_derivative('sech', m, x), rel=1e-9, abs=1e-9)
        assert engine.d_sech_pow(m, Fraction(5, 2), x) == pytest.approx(
            nth_derivative('sech_pow', m, x, nu=2.5), rel=1e-9, abs=1e-9)


@pytest.mark.parametrize('m', range(7))
def test_sech_parity(m):
    for x in (0.3, 2.0, 40.0):
        assert engine.d_sech(m, -x) == pytest.approx((-1) ** m * engine.d_sech(m, x), rel=1e-13)
        assert engine.d_sech_pow(m, Fraction(3, 2), -x) == pytest.approx(
            (-1) ** m * engine.d_sech_pow(m, Fraction(3, 2), x), rel=1e-13)


def test_sech_far_from_origin():
    tail = 2 * math.exp(-720.0)
    assert engine.d_sech(0, 720.0) == pytest.approx(tail, rel=1e-6)
    assert engine.d_sech(1, 720.0) == pytest.approx(-tail, rel=1e-6)
    assert engine.d_sech(1, -720.0) == pytest.approx(tail, rel=1e-6)
    assert engine.d_sech(2, 720.0) == pytest.approx(tail, rel=1e-6)
    # sech itself is below the float range
    assert engine.d_sech(3, 800.0) == 0.0
    assert engine.d_sech(3, -800.0) == 0.0
    assert engine.d_sech(2, math.inf) == 0.0


def test_sech_pow_far_from_origin():
    nu = Fraction(1, 10)
    # sech^ν x ~ (2e^{−x})^ν and ∂² sech^ν ~ ν² sech^ν for large x
    expected = 0.01 * 2 ** 0.1 * math.exp(-100.0)
    assert engine.d_sech_pow(2, nu, 1000.0) == pytest.approx(expected, rel=1e-9)
    assert engine.d_sech_pow(2, nu, -1000.0) == pytest.approx(expected, rel=1e-9)
    assert engine.d_sech_pow(2, 3, 800.0) == 0.0
    with pytest.raises(DomainError):
        engine.d_sech_pow(1, Fraction(-1, 2), 1500.0)


def test_sec_and_tan_low_orders():
    x = 0.6
    c, t = math.cos(x), math.tan(x)
    assert engine.d_sec(0, x) == pytest.approx(1 / c, rel=1e-13)
    assert engine.d_sec(1, x) == pytest.approx(t / c, rel=1e-12)
    assert engine.d_tan_direct(0, x) == pytest.approx(t, rel=1e-12)
    assert engine.d_tan_direct(1, x) == pytest.approx(1 / c ** 2, rel=1e-12)
    assert engine.d_tan_leibniz(2, x) == pytest.approx(2 * t / c ** 2, rel=1e-12)
    assert engine.d_tan_direct(1, 0.0) == pytest.approx(1.0)
    assert engine.d_tan_leibniz(1, 0.0) == pytest.approx(1.0)


def test_cot_low_orders():
    x = 1.1
    s = math.sin(x)
    assert engine.d_cot(0, x) == pytest.approx(math.cos(x) / s, rel=1e-12)
    assert engine.d_cot(1, x) == pytest.approx(-1 / s ** 2, rel=1e-12)


@pytest.mark.parametrize('m', range(0, 13, 3))
def test_circular_routes_match_oracle(m):
    for x in (0.15, 0.9, 1.35):
        oracle_sec = nth_derivative('sec', m, x)
        oracle_tan = nth_derivative('tan', m, x)
        assert engine.d_sec(m, x) == pytest.approx(oracle_sec, rel=1e-9, abs=1e-9)
        assert engine.d_tan_direct(m, x) == pytest.approx(oracle_tan, rel=1e-9, abs=1e-9)
        assert engine.d_tan_leibniz(m, x) == pytest.approx(oracle_tan, rel=1e-9, abs=1e-9)
    assert engine.d_cot(m, 2.2) == pytest.approx(nth_derivative('cot', m, 2.2), rel=1e-9, abs=1e-9)


def test_routes_report_small_imaginary_residual():
    result = engine.sec_route(7, 0.4)
    assert abs(result.residual_im) <= 1e-9 * abs(result.value)
    assert result.method == engine.Method.CLOSED_FORM


def test_poles_raise():
    with pytest.raises(SingularityError):
        engine.d_sec(3, math.pi / 2)
    with pytest.raises(SingularityError):
        engine.d_tan_direct(2, -math.pi / 2)
    with pytest.raises(SingularityError):
        engine.d_cot(1, 0.0)


def test_negative_order_rejected():
    with pytest.raises(DomainError):
        engine.d_sech(-1, 0.0)


def test_quadrant_helpers():
    x = 0.3
    for k in range(8):
        assert engine.shifted_sin(x, k) == pytest.approx(math.sin(x + k * math.pi / 2))
        assert engine.shifted_cos(x, k) == pytest.approx(math.cos(x + k * math.pi / 2))
    assert engine.i_power(5) == 1j
