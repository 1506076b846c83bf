"""
Closed-form n-th derivatives of arctan, Lorentzian powers, arccos, sech,
sech^ν, sec, tan and cot.

The real routes round their transcendental seed (x, or ξ = e^{−|x|} for
sech) to a Fraction once and carry the Stirling / P_n sums exactly; only
irrational prefactors are float. The circular routes run through ξ = e^{ix} in
complex floats and report the imaginary part they discard.
"""

import logging
import math
import sys
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Tuple

from core.combinatorics.stirling import stirling_table
from core.config import CONFIG
from core.errors import ConsistencyError, DomainError, SingularityError
from core.special.aux_polys import (
    check_nu, falling_factorial, pn, pn_lower_family, pn_nu, real_power,
)

logger = logging.getLogger(__name__)


class Method(str, Enum):
    CLOSED_FORM = 'closed_form'
    LEIBNIZ = 'leibniz'
    DP = 'dp'
    HOPPE = 'hoppe'
    ORACLE = 'oracle'


@dataclass(frozen=True)
class DerivResult:
    value: float
    method: Method
    residual_im: float = 0.0


def _check_order(n: int, minimum: int = 0) -> None:
    if n < minimum:
        raise DomainError(f"derivative order must be >= {minimum}, got {n}")


def _rational(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _check_pole(value: float, name: str, x) -> None:
    if abs(value) < CONFIG['tol_singular']:
        raise SingularityError(f"|{name}(x)| < {CONFIG['tol_singular']} at x={x}")


def i_power(k: int) -> complex:
    return (1, 1j, -1, -1j)[k % 4]


def shifted_sin(x: float, k: int) -> float:
    """sin(x + kπ/2) by quadrant"""
    return (math.sin(x), math.cos(x), -math.sin(x), -math.cos(x))[k % 4]


def shifted_cos(x: float, k: int) -> float:
    """cos(x + kπ/2) by quadrant"""
    return (math.cos(x), -math.sin(x), -math.cos(x), math.sin(x))[k % 4]


# -- Lorentzian family and inverse functions ------------------------------

def d_lorentz(n: int, x):
    """K_n(x) = ∂ⁿ 1/(1+x²) = 1/(1+x²) · P_n(−2x/(1+x²), −1/(1+x²)).

    Exact (Fraction) for rational x, float otherwise.
    """
    _check_order(n)
    exact = isinstance(x, (int, Fraction))
    q = _rational(x)
    w = 1 / (1 + q * q)
    value = w * pn(n, -2 * q * w, -w)
    return value if exact else float(value)


def d_arctan(n: int, x):
    """∂ⁿ arctan x = K_{n−1}(x); n = 0 falls back to math.atan"""
    _check_order(n)
    if n == 0:
        logger.warning("order 0 of arctan is a function value; using math.atan (not exact)")
        return math.atan(float(x))
    return d_lorentz(n - 1, x)


def d_lorentz_pow(n: int, nu, x):
    """K_n^ν(x) = ∂ⁿ (1+x²)^{−ν} = (1+x²)^{−ν} P_n^ν(−2x/(1+x²), −1/(1+x²))"""
    _check_order(n)
    nu_q = _rational(nu)
    check_nu(nu_q)
    exact = (isinstance(x, (int, Fraction)) and isinstance(nu, (int, Fraction))
             and nu_q.denominator == 1)
    q = _rational(x)
    w = 1 / (1 + q * q)
    value = real_power(w, nu_q) * pn_nu(n, nu_q, -2 * q * w, -w)
    return value if exact else float(value)


def d_arccos(n: int, x) -> float:
    """∂ⁿ arccos x = −(1−x²)^{−1/2} P_{n−1}^{1/2}(2x/(1−x²), 1/(1−x²))"""
    _check_order(n)
    if abs(x) >= 1:
        raise DomainError(f"arccos derivatives need |x| < 1, got {x}")
    if n == 0:
        logger.warning("order 0 of arccos is a function value; using math.acos (not exact)")
        return math.acos(float(x))
    return -float(pn_lower_family(n - 1, Fraction(1, 2), _rational(x)))


# -- hyperbolic secant ----------------------------------------------------

_LN2 = math.log(2)
_LOG_FLOAT_MAX = math.log(sys.float_info.max)
_LOG_FLOAT_TINY = math.log(sys.float_info.min * sys.float_info.epsilon)


def _log_sech(x) -> float:
    a = abs(float(x))
    return _LN2 - a - math.log1p(math.exp(-2 * a))


def _sech_out_of_range(x, nu) -> bool:
    """True when sech^ν x underflows a float; DomainError when it overflows"""
    log_mag = float(nu) * _log_sech(x)
    if log_mag > _LOG_FLOAT_MAX:
        raise DomainError(f"sech^{nu} at x={x} overflows a float")
    return log_mag < _LOG_FLOAT_TINY


def _sech_seed(x) -> Tuple[Fraction, Fraction]:
    """ξ = e^{−|x|} rounded once, and sech x = 2ξ/(1+ξ²) from it.

    The power of two is split off exactly so ξ never underflows.
    """
    k, r = divmod(abs(float(x)), _LN2)
    xi = Fraction(math.exp(-r)) / 2 ** int(k)
    return xi, 2 * xi / (1 + xi * xi)


def _parity(m: int, x) -> int:
    # sech is even: ∂^m sech(x) = (−1)^m ∂^m sech(−x), and the seed sits at −|x|
    return -1 if x > 0 and m % 2 else 1


def _to_float(value, what: str) -> float:
    try:
        return float(value)
    except OverflowError:
        raise DomainError(f"{what} overflows a float")


def d_sech(m: int, x) -> float:
    """sech x Σ_k S₂(m,k) e^{(k−1)x} [e^x P_k(X, Y) + k P_{k−1}(X, Y)],
    X = −sech x, Y = −sech x / (2e^x)"""
    _check_order(m)
    if _sech_out_of_range(x, 1):
        return 0.0
    xi, sech = _sech_seed(x)
    big_x, big_y = -sech, -sech / (2 * xi)
    p = [pn(k, big_x, big_y) for k in range(m + 1)]
    row = stirling_table(m).row(m)
    total = Fraction(0)
    for k in range(m + 1):
        if not row[k]:
            continue
        inner = xi * p[k] + (k * p[k - 1] if k else 0)
        total += row[k] * xi ** (k - 1) * inner
    return _parity(m, x) * _to_float(sech * total, f"sech^({m}) at x={x}")


def d_sech_pow(m: int, nu, x) -> float:
    """sech^ν x Σ_r S₂(m,r) e^{xr} Σ_s C(r,s) FF(ν, r−s) e^{−x(r−s)} P_s^ν(X, Y).

    FF is the falling factorial ν(ν−1)…; at ν = 1 this is d_sech.
    """
    _check_order(m)
    nu_q = _rational(nu)
    check_nu(nu_q)
    if _sech_out_of_range(x, nu_q):
        return 0.0
    xi, sech = _sech_seed(x)
    big_x, big_y = -sech, -sech / (2 * xi)
    p = [pn_nu(s, nu_q, big_x, big_y) for s in range(m + 1)]
    row = stirling_table(m).row(m)
    total = Fraction(0)
    for r in range(m + 1):
        if not row[r]:
            continue
        inner = Fraction(0)
        for s in range(r + 1):
            # e^{xr} e^{−x(r−s)} = ξ^s
            inner += math.comb(r, s) * falling_factorial(nu_q, r - s) * xi ** s * p[s]
        total += row[r] * inner
    what = f"sech^{nu}^({m}) at x={x}"
    if nu_q.denominator == 1:
        return _parity(m, x) * _to_float(sech ** int(nu_q) * total, what)
    # sech itself may be below the float range while sech^ν is not
    prefactor = math.exp(float(nu_q) * _log_sech(x))
    return _parity(m, x) * prefactor * _to_float(total, what)


# -- circular functions through ξ = e^{ix} --------------------------------

def _settle(z: complex, scale: float) -> Tuple[float, float]:
    """Real part of z; the imaginary part must be rounding noise"""
    floor = 64 * sys.float_info.epsilon * scale
    if abs(z.imag) > CONFIG['tol_imag'] * abs(z.real) + floor:
        raise ConsistencyError(
            f"imaginary residual {z.imag:.3e} exceeds tolerance for value {z.real:.17g}")
    return z.real, z.imag


def _sec_derivative(m: int, sec_value: float, xi: complex) -> Tuple[float, float]:
    """i^m sec Σ_r S₂(m,r) ξ^{r−1} [ξ P_r + r P_{r−1}] at X = −sec, Y = −sec/(2ξ)"""
    big_x, big_y = -sec_value, -sec_value / (2 * xi)
    p = [pn(r, big_x, big_y) for r in range(m + 1)]
    row = stirling_table(m).row(m)
    total, scale = 0j, 0.0
    for r in range(m + 1):
        if not row[r]:
            continue
        term = row[r] * xi ** (r - 1) * (xi * p[r] + (r * p[r - 1] if r else 0))
        total += term
        scale += abs(term)
    return _settle(i_power(m) * sec_value * total, abs(sec_value) * scale)


def sec_route(m: int, x: float) -> DerivResult:
    _check_order(m)
    c = math.cos(x)
    _check_pole(c, 'cos', x)
    value, residual = _sec_derivative(m, 1 / c, complex(c, math.sin(x)))
    return DerivResult(value, Method.CLOSED_FORM, residual)


def d_sec(m: int, x: float) -> float:
    return sec_route(m, x).value


def tan_leibniz_route(m: int, x: float) -> DerivResult:
    """Σ_s C(m,s) sin(x + (m−s)π/2) ∂^s sec x"""
    _check_order(m)
    _check_pole(math.cos(x), 'cos', x)
    total, residual = 0.0, 0.0
    for s in range(m + 1):
        sec_s = sec_route(s, x)
        total += math.comb(m, s) * shifted_sin(x, m - s) * sec_s.value
        residual = max(residual, abs(sec_s.residual_im))
    return DerivResult(total, Method.LEIBNIZ, residual)


def d_tan_leibniz(m: int, x: float) -> float:
    return tan_leibniz_route(m, x).value


def tan_direct_route(m: int, x: float) -> DerivResult:
    """i^{m+1} [sec x Σ_r S₂(m,r) e^{ix(r−1)} P_r(−sec x, −sec x/(2e^{ix})) − δ_{m,0}]"""
    _check_order(m)
    c = math.cos(x)
    _check_pole(c, 'cos', x)
    sec_value = 1 / c
    xi = complex(c, math.sin(x))
    big_x, big_y = -sec_value, -sec_value / (2 * xi)
    row = stirling_table(m).row(m)
    total, scale = 0j, 0.0
    for r in range(m + 1):
        if not row[r]:
            continue
        term = row[r] * xi ** (r - 1) * pn(r, big_x, big_y)
        total += term
        scale += abs(term)
    z = i_power(m + 1) * (sec_value * total - (1 if m == 0 else 0))
    value, residual = _settle(z, abs(sec_value) * scale + 1)
    return DerivResult(value, Method.CLOSED_FORM, residual)


def d_tan_direct(m: int, x: float) -> float:
    return tan_direct_route(m, x).value


def cot_route(m: int, x: float) -> DerivResult:
    """Σ_s C(m,s) cos(x + (m−s)π/2) ∂^s sec(x − π/2).

    sec(x − π/2) = 1/sin x and e^{i(x−π/2)} = sin x − i cos x, so the
    shifted secant derivatives reuse the sec kernel without adding π/2.
    """
    _check_order(m)
    sn = math.sin(x)
    _check_pole(sn, 'sin', x)
    sec_shifted = 1 / sn
    xi_shifted = complex(sn, -math.cos(x))
    total, residual = 0.0, 0.0
    for s in range(m + 1):
        value, res = _sec_derivative(s, sec_shifted, xi_shifted)
        total += math.comb(m, s) * shifted_cos(x, m - s) * value
        residual = max(residual, abs(res))
    return DerivResult(total, Method.CLOSED_FORM, residual)


def d_cot(m: int, x: float) -> float:
    return cot_route(m, x).value
