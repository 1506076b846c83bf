"""
Derivative polynomials of tan / sec and the cos^j families.

    ∂ⁿ tan x   = Π_n(tan x),          Π_n = [(1+ξ²)∂_ξ]ⁿ ξ
    ∂ⁿ sec x   = sec x · Q_n(tan x),  Q_n = s⁻¹ [(1+ξ²)∂_ξ]ⁿ s,  s = √(1+ξ²)
    Λ_{m,j}(ξ) = [(1+ξ²)∂_ξ]^m (1+ξ²)^{−j/2} = λ_{m,j}(ξ) (1+ξ²)^{−j/2}
    Δ_{m,j}(ξ) = (−√(1−ξ²) ∂_ξ)^m ξ^j

Sign conventions, checked against the jet oracle:
    ∂^m cos^j x = Δ_{m,j}(cos x) with the root taken as s = sin x (no (−1)^m)
    ∂^m cos^j x = sgn(cos x)^j Λ_{m,j}(tan x) with the positive root, i.e.
                = λ_{m,j}(tan x) cos^j x
"""

import logging
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from core.algebra.ext_ring import COS_LIFT, SIGMA_MINUS, SIGMA_PLUS, TAN_LIFT, ExtElem
from core.algebra.poly import ONE, XI, ZERO, Poly
from core.algebra.series import SeriesInT
from core.config import CONFIG
from core.errors import DomainError, SingularityError
from core.oracle.jet import rational_series
from core.special.aux_polys import pn_one_var_poly

logger = logging.getLogger(__name__)


# -- cached recurrences ---------------------------------------------------

class _RecurrenceCache:
    """Monotonically growing list of family members, lock-protected"""

    def __init__(self, name: str, first, step: Callable):
        self.name = name
        self._items = [first]
        self._step = step
        self._lock = threading.Lock()

    def get(self, n: int):
        if n < 0:
            raise DomainError(f"{self.name}: order must be non-negative, got {n}")
        if n >= len(self._items):
            with self._lock:
                while len(self._items) <= n:
                    self._items.append(self._step(self._items[-1]))
                logger.debug("%s cache grown to n=%d", self.name, len(self._items) - 1)
        return self._items[n]


_pi_cache = _RecurrenceCache('Pi', XI, lambda p: SIGMA_PLUS * p.derive())
_q_cache = _RecurrenceCache('Q', ONE, lambda q: SIGMA_PLUS * q.derive() + XI * q)
_lambda_caches: Dict[int, _RecurrenceCache] = {}
_delta_caches: Dict[int, _RecurrenceCache] = {}
_family_lock = threading.Lock()


def _lambda_cache(j: int) -> _RecurrenceCache:
    with _family_lock:
        if j not in _lambda_caches:
            _lambda_caches[j] = _RecurrenceCache(
                f'lambda[j={j}]', ONE, lambda p: SIGMA_PLUS * p.derive() - XI * p * j)
        return _lambda_caches[j]


def _delta_cache(j: int) -> _RecurrenceCache:
    with _family_lock:
        if j not in _delta_caches:
            _delta_caches[j] = _RecurrenceCache(
                f'delta[j={j}]', ExtElem(XI ** j, ZERO, SIGMA_MINUS), COS_LIFT.apply)
        return _delta_caches[j]


# -- family members -------------------------------------------------------

@dataclass(frozen=True)
class PiPoly:
    n: int
    p: Poly


@dataclass(frozen=True)
class QPoly:
    n: int
    q: Poly


@dataclass(frozen=True)
class LambdaElem:
    """λ(ξ) · (1+ξ²)^{exponent}, exponent = −j/2 kept as a tag"""
    m: int
    j: int
    carrier: ExtElem

    @property
    def exponent(self) -> Fraction:
        return Fraction(-self.j, 2)

    @property
    def poly(self) -> Poly:
        return self.carrier.a

    def evaluate(self, xi: float) -> float:
        """Λ_{m,j}(ξ) with the positive root of 1+ξ²"""
        return float(self.poly.evaluate(xi)) * (1 + xi * xi) ** float(self.exponent)


@dataclass(frozen=True)
class DeltaElem:
    m: int
    j: int
    carrier: ExtElem

    def evaluate(self, xi: float, s: float) -> float:
        return self.carrier.evaluate(xi, s)


def pi_poly(n: int) -> PiPoly:
    """Π_0 = ξ, Π_{k+1} = (1+ξ²) Π_k′"""
    return PiPoly(n, _pi_cache.get(n))


def q_poly(n: int) -> QPoly:
    """Q_0 = 1, Q_{k+1} = (1+ξ²) Q_k′ + ξ Q_k"""
    return QPoly(n, _q_cache.get(n))


def pi_poly_via_ring(n: int) -> Poly:
    """a-part of [(1+ξ²)∂]ⁿ ξ in the σ = 1+ξ² ring"""
    return TAN_LIFT.power(ExtElem(XI, ZERO, SIGMA_PLUS), n).a


def q_poly_via_ring(n: int) -> Poly:
    """s-part of [(1+ξ²)∂]ⁿ s"""
    return TAN_LIFT.power(ExtElem.root(SIGMA_PLUS), n).b


def lambda_elem(m: int, j: int) -> LambdaElem:
    """λ_0 = 1, λ_{k+1} = (1+ξ²) λ_k′ − jξ λ_k"""
    if j < 0:
        raise DomainError(f"j must be non-negative, got {j}")
    lam = _lambda_cache(j).get(m)
    return LambdaElem(m, j, ExtElem(lam, ZERO, SIGMA_PLUS))


def delta_elem(m: int, j: int) -> DeltaElem:
    """m applications of −s∂_ξ (s² = 1−ξ²) to ξ^j"""
    if j < 0:
        raise DomainError(f"j must be non-negative, got {j}")
    return DeltaElem(m, j, _delta_cache(j).get(m))


# -- generating-function checks -------------------------------------------

@dataclass
class GfReport:
    family: str
    n_max: int
    passed: bool
    first_failure: Optional[int] = None
    expected: Optional[str] = None
    got: Optional[str] = None


def _compare(family: str, n_max: int, series: SeriesInT, member: Callable) -> GfReport:
    for k in range(n_max + 1):
        expected = member(k)
        got = series.egf_coefficient(k)
        if got != expected:
            logger.debug("%s generating function mismatch at order %d", family, k)
            return GfReport(family, n_max, False, k, str(expected), str(got))
    return GfReport(family, n_max, True)


def _tan_sec_series(n_max: int, one=ONE):
    tan_t = SeriesInT.from_scalars(rational_series('tan', n_max), n_max, one)
    sec_t = SeriesInT.from_scalars(rational_series('sec', n_max), n_max, one)
    return tan_t, sec_t


def _cos_sin_series(n_max: int, one=ONE):
    cos_t = SeriesInT.from_scalars(rational_series('cos', n_max), n_max, one)
    sin_t = SeriesInT.from_scalars(rational_series('sin', n_max), n_max, one)
    return cos_t, sin_t


def gf_check_pi(n_max: int) -> GfReport:
    """Σ tⁿ/n! Π_n(ξ) = (ξ + tan t)/(1 − ξ tan t)"""
    tan_t, _ = _tan_sec_series(n_max)
    series = (tan_t + XI) / (1 - tan_t * XI)
    return _compare('pi', n_max, series, lambda k: pi_poly(k).p)


def gf_check_q(n_max: int) -> GfReport:
    """Σ tⁿ/n! Q_n(ξ) = sec t / (1 − ξ tan t)"""
    tan_t, sec_t = _tan_sec_series(n_max)
    series = sec_t / (1 - tan_t * XI)
    return _compare('q', n_max, series, lambda k: q_poly(k).q)


def gf_check_lambda(m_max: int, j: int) -> GfReport:
    """Σ t^m/m! Λ_{m,j} = [1 − ξ tan t]^j / [(1+ξ²)(1+tan²t)]^{j/2}.

    With (1+tan²t)^{−j/2} = cos^j t and the (1+ξ²)^{−j/2} tag factored out,
    the carrier series is (cos t − ξ sin t)^j.
    """
    cos_t, sin_t = _cos_sin_series(m_max)
    series = (cos_t - sin_t * XI) ** j
    return _compare(f'lambda[j={j}]', m_max, series, lambda k: lambda_elem(k, j).poly)


def gf_check_delta(m_max: int, j: int) -> GfReport:
    """Σ t^m/m! Δ_{m,j} = (ξ − s tan t)^j cos^j t = (ξ cos t − s sin t)^j, s² = 1−ξ²"""
    one = ExtElem(ONE, ZERO, SIGMA_MINUS)
    cos_t, sin_t = _cos_sin_series(m_max, one)
    series = (cos_t * XI - sin_t * ExtElem.root(SIGMA_MINUS)) ** j
    return _compare(f'delta[j={j}]', m_max, series, lambda k: delta_elem(k, j).carrier)


def pn_gf_check(n_max: int) -> GfReport:
    """Σ tⁿ/n! P_n(z) = 1/(1 − tz + t²)"""
    order = max(n_max, 0)
    denominator = SeriesInT([ONE, -XI, ONE], order)
    return _compare('pn', n_max, denominator.inverse(), pn_one_var_poly)


# -- Lie flow -------------------------------------------------------------

LIE_FUNCTIONS = ('xi', 'sqrt')


@dataclass
class LieFlowReport:
    f_id: str
    t: float
    xi: float
    terms: int
    series_value: Optional[float]
    flow_value: Optional[float]
    within_radius: bool
    passed: Optional[bool]


def lie_flow_check(t: float, xi: float, f_id: str = 'xi', terms: int = 25,
                   tol: float = 1e-12) -> LieFlowReport:
    """Σ_{n≤N} tⁿ/n! [(1+ξ²)∂]ⁿ f against f((ξ cos t + sin t)/(cos t − ξ sin t)).

    Outside the convergence radius |t| < π/2 − |arctan ξ| the result is
    reported with passed=None rather than failed.
    """
    if f_id not in LIE_FUNCTIONS:
        raise DomainError(f"unknown Lie-flow test function {f_id!r}")
    denominator = math.cos(t) - xi * math.sin(t)
    if abs(denominator) < CONFIG['tol_singular']:
        raise SingularityError(f"cos t − ξ sin t vanishes at t={t}, ξ={xi}")
    mapped = (xi * math.cos(t) + math.sin(t)) / denominator
    radius = math.pi / 2 - abs(math.atan(xi))
    if abs(t) >= radius:
        return LieFlowReport(f_id, t, xi, terms, None, None, False, None)

    root = math.sqrt(1 + xi * xi)
    if f_id == 'xi':
        flow_value = mapped
        members = [float(pi_poly(n).p.evaluate(xi)) for n in range(terms + 1)]
    else:
        flow_value = math.sqrt(1 + mapped * mapped)
        members = [float(q_poly(n).q.evaluate(xi)) * root for n in range(terms + 1)]
    series_value = sum(t ** n / math.factorial(n) * members[n] for n in range(terms + 1))
    passed = abs(series_value - flow_value) <= tol * max(1.0, abs(flow_value))
    return LieFlowReport(f_id, t, xi, terms, series_value, flow_value, True, passed)


# -- evaluators -----------------------------------------------------------

def _cos_checked(x: float) -> float:
    c = math.cos(x)
    if abs(c) < CONFIG['tol_singular']:
        raise SingularityError(f"|cos(x)| < {CONFIG['tol_singular']} at x={x}")
    return c


def dp_eval_tan(m: int, x: float) -> float:
    """Π_m(tan x)"""
    c = _cos_checked(x)
    return float(pi_poly(m).p.evaluate(math.sin(x) / c))


def dp_eval_sec(m: int, x: float) -> float:
    """sec x · Q_m(tan x)"""
    c = _cos_checked(x)
    return float(q_poly(m).q.evaluate(math.sin(x) / c)) / c


def evaluate_delta(m: int, j: int, x: float) -> float:
    """∂^m cos^j x = Δ_{m,j}(cos x) with s = sin x"""
    return float(delta_elem(m, j).evaluate(math.cos(x), math.sin(x)))


def evaluate_lambda(m: int, j: int, x: float) -> float:
    """∂^m cos^j x = λ_{m,j}(tan x) cos^j x"""
    c = _cos_checked(x)
    return float(lambda_elem(m, j).poly.evaluate(math.sin(x) / c)) * c ** j


# -- Hoppe formula for sec ------------------------------------------------

def hoppe_coefficient(m: int, k: int) -> ExtElem:
    """A_{m,k} = Σ_j C(k,j) (−ξ)^{k−j} ∂^m(ξ^j), ξ = cos x, as an exact ring element"""
    if k < 0 or m < 0:
        raise DomainError("Hoppe indices must be non-negative")
    total = ExtElem(ZERO, ZERO, SIGMA_MINUS)
    for j in range(k + 1):
        total = total + delta_elem(m, j).carrier * ((-XI) ** (k - j) * math.comb(k, j))
    return total


_hoppe_cache: Dict[int, ExtElem] = {}
_hoppe_lock = threading.Lock()


def hoppe_numerator(m: int) -> ExtElem:
    """cos^{m+1} x · ∂^m sec x = Σ_{k≤m} (−1)^k ξ^{m−k} A_{m,k}"""
    with _hoppe_lock:
        if m not in _hoppe_cache:
            total = ExtElem(ZERO, ZERO, SIGMA_MINUS)
            for k in range(m + 1):
                total = total + hoppe_coefficient(m, k) * (XI ** (m - k) * (-1) ** k)
            _hoppe_cache[m] = total
        return _hoppe_cache[m]


def hoppe_sec(m: int, x: float) -> float:
    """Σ_{k≤m} sec^{k+1} x Σ_j C(k,j)(−1)^j cos^{k−j} x ∂^m cos^j x"""
    if m < 0:
        raise DomainError(f"order must be non-negative, got {m}")
    c = _cos_checked(x)
    return float(hoppe_numerator(m).evaluate(c, math.sin(x))) / c ** (m + 1)


def family_members(family: str, n_max: int, j: int = 0) -> List[Tuple[int, str, Poly]]:
    """(n, part, poly) rows for the pi / q / lambda / delta tables"""
    rows = []
    for n in range(n_max + 1):
        if family == 'pi':
            rows.append((n, '', pi_poly(n).p))
        elif family == 'q':
            rows.append((n, '', q_poly(n).q))
        elif family == 'lambda':
            rows.append((n, '', lambda_elem(n, j).poly))
        elif family == 'delta':
            carrier = delta_elem(n, j).carrier
            rows.append((n, 'a', carrier.a))
            rows.append((n, 's', carrier.b))
        else:
            raise DomainError(f"unknown derivative-polynomial family {family!r}")
    return rows
