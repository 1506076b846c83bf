"""
Truncated Taylor series ("jets") used as the independent derivative oracle.

A Jet of order N at x₀ stores c_k = f^{(k)}(x₀)/k! for k ≤ N. Jets are
built compositionally from the elementary seeds (sin, cos, exp, sinh,
cosh and the identity) with closed arithmetic, so they never touch the
closed forms they check. Coefficients are Fractions in exact mode (x₀ = 0,
or a rational point for the Lorentzian family) and floats otherwise.
"""

import math
from fractions import Fraction
from typing import Callable, List, Optional, Sequence

from core.config import CONFIG
from core.errors import DomainError, SingularityError

EXACT = 'exact'
FLOAT = 'float'

JET_FUNCTIONS = (
    'sin', 'cos', 'exp', 'sinh', 'cosh', 'tan', 'sec', 'cot', 'sech', 'sech_pow',
    'arctan', 'arccos', 'lorentz', 'lorentz_pow', 'cos_pow', 'gauss',
)
# rational seeds exist only at x₀ = 0 for these
_EXACT_AT_ZERO = {'sin', 'cos', 'exp', 'sinh', 'cosh', 'tan', 'sec', 'sech', 'sech_pow',
                  'cos_pow', 'arctan', 'gauss'}
_EXACT_ANYWHERE = {'lorentz', 'lorentz_pow'}


class Jet:
    __slots__ = ('coeffs', 'base_point', 'order')

    def __init__(self, coeffs: Sequence, base_point=0, order: Optional[int] = None):
        values = list(coeffs)
        if order is None:
            order = len(values) - 1
        zero = values[0] * 0 if values else 0
        values = values[:order + 1] + [zero] * (order + 1 - len(values))
        self.coeffs: List = values
        self.base_point = base_point
        self.order = order

    @classmethod
    def variable(cls, x0, order: int) -> 'Jet':
        return cls([x0, x0 * 0 + 1], x0, order)

    @classmethod
    def constant(cls, value, x0, order: int) -> 'Jet':
        return cls([value], x0, order)

    def _zero(self):
        return self.coeffs[0] * 0

    def _like(self, coeffs) -> 'Jet':
        return Jet(coeffs, self.base_point, self.order)

    def _lift(self, other) -> 'Jet':
        if isinstance(other, Jet):
            if other.order != self.order:
                raise DomainError("jets of different orders")
            return other
        return Jet.constant(self._zero() + other, self.base_point, self.order)

    def __add__(self, other) -> 'Jet':
        other = self._lift(other)
        return self._like([a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> 'Jet':
        return self._like([-a for a in self.coeffs])

    def __sub__(self, other) -> 'Jet':
        return self + (-self._lift(other))

    def __rsub__(self, other) -> 'Jet':
        return self._lift(other) - self

    def __mul__(self, other) -> 'Jet':
        if not isinstance(other, Jet):
            return self._like([a * other for a in self.coeffs])
        other = self._lift(other)
        a, b = self.coeffs, other.coeffs
        out = []
        for n in range(self.order + 1):
            acc = self._zero()
            for k in range(n + 1):
                acc += a[k] * b[n - k]
            out.append(acc)
        return self._like(out)

    __rmul__ = __mul__

    def _check_unit(self) -> None:
        c0 = self.coeffs[0]
        if isinstance(c0, Fraction):
            if c0 == 0:
                raise SingularityError(f"pole at x0={self.base_point}")
        elif abs(c0) < CONFIG['tol_singular']:
            raise SingularityError(f"pole within tolerance of x0={self.base_point}")

    def reciprocal(self) -> 'Jet':
        self._check_unit()
        a = self.coeffs
        out = [1 / a[0]]
        for n in range(1, self.order + 1):
            acc = self._zero()
            for k in range(1, n + 1):
                acc += a[k] * out[n - k]
            out.append(-acc / a[0])
        return self._like(out)

    def __truediv__(self, other) -> 'Jet':
        if isinstance(other, Jet):
            return self * other.reciprocal()
        return self._like([a / other for a in self.coeffs])

    def __rtruediv__(self, other) -> 'Jet':
        return self._lift(other) * self.reciprocal()

    def __pow__(self, exponent: int) -> 'Jet':
        if not isinstance(exponent, int) or exponent < 0:
            raise DomainError("use .power() for non-integer exponents")
        result = Jet.constant(self._zero() + 1, self.base_point, self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def power(self, nu) -> 'Jet':
        """self**nu for real nu (Miller's recurrence); needs a nonzero constant term"""
        self._check_unit()
        a = self.coeffs
        a0 = a[0]
        if a0 == 1:
            b0 = a0
        elif isinstance(a0, Fraction) and nu == int(nu):
            b0 = a0 ** int(nu)
        else:
            b0 = float(a0) ** float(nu)
        out = [b0]
        for n in range(1, self.order + 1):
            acc = self._zero()
            for k in range(1, n + 1):
                acc += (nu * k - (n - k)) * a[k] * out[n - k]
            out.append(acc / (n * a0))
        return self._like(out)

    def sqrt(self) -> 'Jet':
        return self.power(Fraction(1, 2))

    def exp(self) -> 'Jet':
        a = self.coeffs
        a0 = a[0]
        out = [a0 * 0 + 1 if a0 == 0 else math.exp(a0)]
        for n in range(1, self.order + 1):
            acc = self._zero()
            for k in range(1, n + 1):
                acc += k * a[k] * out[n - k]
            out.append(acc / n)
        return self._like(out)

    def integrate(self, constant) -> 'Jet':
        """Antiderivative with value ``constant`` at x₀, same order"""
        return self._like([constant] + [c / (k + 1) for k, c in enumerate(self.coeffs[:-1])])

    def derivative(self, k: int):
        """f^{(k)}(x₀) = k! c_k"""
        if k > self.order:
            raise DomainError(f"order {k} exceeds jet order {self.order}")
        return self.coeffs[k] * math.factorial(k)

    def shift(self, h) -> 'Jet':
        """Re-expand the Taylor polynomial at x₀ + h"""
        n_max = self.order
        out = []
        for k in range(n_max + 1):
            acc = self._zero()
            for n in range(k, n_max + 1):
                acc += math.comb(n, k) * self.coeffs[n] * h ** (n - k)
            out.append(acc)
        return Jet(out, self.base_point + h, self.order)

    def __repr__(self) -> str:
        return f"Jet(x0={self.base_point}, coeffs={self.coeffs!r})"


# -- elementary seeds -----------------------------------------------------

def _seed_sin(x0, order: int, exact: bool) -> Jet:
    if exact:
        coeffs = [Fraction(0) if k % 2 == 0 else Fraction((-1) ** (k // 2), math.factorial(k))
                  for k in range(order + 1)]
        return Jet(coeffs, x0, order)
    s, c = math.sin(x0), math.cos(x0)
    quadrant = (s, c, -s, -c)
    return Jet([quadrant[k % 4] / math.factorial(k) for k in range(order + 1)], x0, order)


def _seed_cos(x0, order: int, exact: bool) -> Jet:
    if exact:
        coeffs = [Fraction((-1) ** (k // 2), math.factorial(k)) if k % 2 == 0 else Fraction(0)
                  for k in range(order + 1)]
        return Jet(coeffs, x0, order)
    s, c = math.sin(x0), math.cos(x0)
    quadrant = (c, -s, -c, s)
    return Jet([quadrant[k % 4] / math.factorial(k) for k in range(order + 1)], x0, order)


def _float_seed(fn: Callable[[float], float], x0: float) -> float:
    try:
        return fn(x0)
    except OverflowError:
        raise DomainError(f"{fn.__name__}({x0}) overflows a float; no float jet there")


def _seed_exp(x0, order: int, exact: bool) -> Jet:
    e = Fraction(1) if exact else _float_seed(math.exp, x0)
    return Jet([e / math.factorial(k) for k in range(order + 1)], x0, order)


def _seed_hyperbolic(x0, order: int, exact: bool, even_first: bool) -> Jet:
    if exact:
        ch, sh = Fraction(1), Fraction(0)
    else:
        ch, sh = _float_seed(math.cosh, x0), _float_seed(math.sinh, x0)
    first, second = (ch, sh) if even_first else (sh, ch)
    return Jet([(first if k % 2 == 0 else second) / math.factorial(k)
                for k in range(order + 1)], x0, order)


def jet_of(f_id: str, x0, order: int, mode: str = FLOAT, nu=None, j: Optional[int] = None) -> Jet:
    """Jet of ``f_id`` at x₀ up to ``order``"""
    if f_id not in JET_FUNCTIONS:
        raise DomainError(f"unknown function {f_id!r}")
    if order < 0:
        raise DomainError("jet order must be non-negative")
    exact = mode == EXACT
    if exact:
        x0 = Fraction(x0)
        if f_id in _EXACT_AT_ZERO and x0 != 0:
            raise DomainError(f"exact jets of {f_id} exist only at x0 = 0")
        if f_id not in _EXACT_AT_ZERO | _EXACT_ANYWHERE:
            raise DomainError(f"{f_id} has no exact jet")
    else:
        x0 = float(x0)

    if f_id in ('sech_pow', 'lorentz_pow'):
        if nu is None:
            raise DomainError(f"{f_id} needs nu")
        nu = Fraction(nu) if exact else float(nu)
    if f_id == 'cos_pow' and (j is None or j < 0):
        raise DomainError("cos_pow needs a non-negative j")

    x = Jet.variable(x0, order)
    if f_id == 'sin':
        return _seed_sin(x0, order, exact)
    if f_id == 'cos':
        return _seed_cos(x0, order, exact)
    if f_id == 'exp':
        return _seed_exp(x0, order, exact)
    if f_id == 'cosh':
        return _seed_hyperbolic(x0, order, exact, even_first=True)
    if f_id == 'sinh':
        return _seed_hyperbolic(x0, order, exact, even_first=False)
    if f_id == 'tan':
        return _seed_sin(x0, order, exact) / _seed_cos(x0, order, exact)
    if f_id == 'sec':
        return 1 / _seed_cos(x0, order, exact)
    if f_id == 'cot':
        return _seed_cos(x0, order, exact) / _seed_sin(x0, order, exact)
    if f_id == 'sech':
        return 1 / _seed_hyperbolic(x0, order, exact, even_first=True)
    if f_id == 'sech_pow':
        return _seed_hyperbolic(x0, order, exact, even_first=True).power(-nu)
    if f_id == 'cos_pow':
        return _seed_cos(x0, order, exact) ** j
    if f_id == 'lorentz':
        return 1 / (1 + x * x)
    if f_id == 'lorentz_pow':
        return (1 + x * x).power(-nu)
    if f_id == 'gauss':
        return (-(x * x)).exp()
    if f_id == 'arctan':
        constant = Fraction(0) if exact else math.atan(x0)
        return (1 / (1 + x * x)).integrate(constant)
    # arccos
    if abs(x0) >= 1:
        raise DomainError(f"arccos jet needs |x0| < 1, got {x0}")
    return (-(1 - x * x).power(-0.5)).integrate(math.acos(x0))


def nth_derivative(f_id: str, n: int, x0, nu=None, j: Optional[int] = None) -> float:
    """n!·c_n of the float jet"""
    return float(jet_of(f_id, x0, n, FLOAT, nu=nu, j=j).derivative(n))


def rational_series(f_id: str, order: int) -> List[Fraction]:
    """Exact Maclaurin coefficients of sin, cos, tan or sec"""
    if f_id not in ('sin', 'cos', 'tan', 'sec'):
        raise DomainError(f"no rational series for {f_id!r}")
    return list(jet_of(f_id, 0, order, EXACT).coeffs)
