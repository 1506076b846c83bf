"""
Dispatch of a derivative request to every route available for a function.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Callable, Dict, List, Optional, Sequence, Union

from core.deriv import derivative_polys as dp
from core.deriv import engine
from core.config import CONFIG
from core.deriv.engine import DerivResult, Method
from core.errors import DomainError
from core.oracle.jet import nth_derivative
from core.special.aux_polys import check_nu

logger = logging.getLogger(__name__)


class FnId(str, Enum):
    TAN = 'tan'
    SEC = 'sec'
    COT = 'cot'
    SECH = 'sech'
    SECH_POW = 'sech_pow'
    ARCTAN = 'arctan'
    ARCCOS = 'arccos'
    LORENTZ = 'lorentz'
    LORENTZ_POW = 'lorentz_pow'
    COS_POW = 'cos_pow'


NEEDS_NU = {FnId.SECH_POW, FnId.LORENTZ_POW}
NEEDS_J = {FnId.COS_POW}


@dataclass(frozen=True)
class DerivRequest:
    fn: FnId
    order: int
    at: float
    method: Optional[Method] = None   # None means every available route
    nu: Optional[Union[float, Fraction]] = None
    j: Optional[int] = None

    def __post_init__(self):
        if self.order < 0:
            raise DomainError(f"order must be non-negative, got {self.order}")
        if not math.isfinite(self.at):
            raise DomainError(f"evaluation point must be finite, got {self.at}")
        if self.fn in NEEDS_NU:
            if self.nu is None:
                raise DomainError(f"{self.fn.value} needs --nu")
            check_nu(self.nu)
        if self.fn in NEEDS_J and (self.j is None or self.j < 0):
            raise DomainError(f"{self.fn.value} needs a non-negative --j")
        if self.method is not None and self.method not in available_methods(self.fn):
            raise DomainError(
                f"method {self.method.value} is not available for {self.fn.value}")


def _value(method: Method, fn: Callable) -> Callable[[DerivRequest], DerivResult]:
    return lambda r: DerivResult(float(fn(r)), method)


def _oracle(r: DerivRequest) -> DerivResult:
    return DerivResult(nth_derivative(r.fn.value, r.order, r.at, nu=r.nu, j=r.j), Method.ORACLE)


_CLOSED_FORMS: Dict[FnId, Callable[[DerivRequest], DerivResult]] = {
    FnId.TAN: lambda r: engine.tan_direct_route(r.order, r.at),
    FnId.SEC: lambda r: engine.sec_route(r.order, r.at),
    FnId.COT: lambda r: engine.cot_route(r.order, r.at),
    FnId.SECH: _value(Method.CLOSED_FORM, lambda r: engine.d_sech(r.order, r.at)),
    FnId.SECH_POW: _value(Method.CLOSED_FORM, lambda r: engine.d_sech_pow(r.order, r.nu, r.at)),
    FnId.ARCTAN: _value(Method.CLOSED_FORM, lambda r: engine.d_arctan(r.order, r.at)),
    FnId.ARCCOS: _value(Method.CLOSED_FORM, lambda r: engine.d_arccos(r.order, r.at)),
    FnId.LORENTZ: _value(Method.CLOSED_FORM, lambda r: engine.d_lorentz(r.order, r.at)),
    FnId.LORENTZ_POW: _value(Method.CLOSED_FORM,
                             lambda r: engine.d_lorentz_pow(r.order, r.nu, r.at)),
    FnId.COS_POW: _value(Method.CLOSED_FORM, lambda r: dp.evaluate_delta(r.order, r.j, r.at)),
}

_EXTRA_ROUTES: Dict[FnId, Dict[Method, Callable[[DerivRequest], DerivResult]]] = {
    FnId.TAN: {
        Method.LEIBNIZ: lambda r: engine.tan_leibniz_route(r.order, r.at),
        Method.DP: _value(Method.DP, lambda r: dp.dp_eval_tan(r.order, r.at)),
    },
    FnId.SEC: {
        Method.DP: _value(Method.DP, lambda r: dp.dp_eval_sec(r.order, r.at)),
        Method.HOPPE: _value(Method.HOPPE, lambda r: dp.hoppe_sec(r.order, r.at)),
    },
    FnId.COS_POW: {
        Method.DP: _value(Method.DP, lambda r: dp.evaluate_lambda(r.order, r.j, r.at)),
    },
}


def available_methods(fn: FnId) -> List[Method]:
    """Routes for ``fn`` in a fixed display order"""
    methods = [Method.CLOSED_FORM, *_EXTRA_ROUTES.get(fn, {}), Method.ORACLE]
    order = list(Method)
    return sorted(methods, key=order.index)


def _route(fn: FnId, method: Method) -> Callable[[DerivRequest], DerivResult]:
    if method == Method.CLOSED_FORM:
        return _CLOSED_FORMS[fn]
    if method == Method.ORACLE:
        return _oracle
    return _EXTRA_ROUTES[fn][method]


def evaluate(request: DerivRequest) -> List[DerivResult]:
    """One DerivResult per requested route, in display order"""
    methods = [request.method] if request.method else available_methods(request.fn)
    results = []
    for method in methods:
        result = _route(request.fn, method)(request)
        logger.debug("%s^(%d)(%r) via %s = %.17g",
                     request.fn.value, request.order, request.at, method.value, result.value)
        results.append(result)
    return results


def max_relative_deviation(results: Sequence[DerivResult]) -> float:
    """max over pairs of |a − b| / max(|a|, |b|, floor).

    The floor (CONFIG['abs_floor']) makes this an absolute deviation for
    values below it in magnitude, where routes agree only to rounding noise.
    """
    worst = 0.0
    for a, b in combinations(results, 2):
        scale = max(abs(a.value), abs(b.value), CONFIG['abs_floor'])
        worst = max(worst, abs(a.value - b.value) / scale)
    return worst
