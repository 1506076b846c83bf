"""
Quadratic extension ring Q[ξ][s] / (s² − σ(ξ)).

Elements are a(ξ) + b(ξ)·s. Two rings are used: σ = 1+ξ² (carriers of the
tangent-side families, s = √(1+ξ²)) and σ = 1−ξ² (cosine side,
s = √(1−ξ²)). Nothing here divides by s; first-order operators that would
leave the ring raise ConfigurationError.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from core.algebra.poly import Poly, ONE, ZERO, XI
from core.errors import ConfigurationError

SIGMA_PLUS = ONE + XI * XI    # 1 + ξ²
SIGMA_MINUS = ONE - XI * XI   # 1 − ξ²


class ExtElem:
    """Immutable a + b·s with s² = sigma"""

    __slots__ = ('a', 'b', 'sigma')

    def __init__(self, a=ZERO, b=ZERO, sigma: Poly = SIGMA_PLUS):
        object.__setattr__(self, 'a', a if isinstance(a, Poly) else Poly([a]))
        object.__setattr__(self, 'b', b if isinstance(b, Poly) else Poly([b]))
        object.__setattr__(self, 'sigma', sigma)

    def __setattr__(self, name, value):
        raise AttributeError("ExtElem is immutable")

    @classmethod
    def root(cls, sigma: Poly) -> 'ExtElem':
        """The element s itself"""
        return cls(ZERO, ONE, sigma)

    def _coerce(self, other):
        if isinstance(other, ExtElem):
            if other.sigma != self.sigma:
                raise ConfigurationError("elements of different extension rings")
            return other
        if isinstance(other, Poly):
            return ExtElem(other, ZERO, self.sigma)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return ExtElem(Poly([other]), ZERO, self.sigma)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ExtElem(self.a + other.a, self.b + other.b, self.sigma)

    __radd__ = __add__

    def __neg__(self) -> 'ExtElem':
        return ExtElem(-self.a, -self.b, self.sigma)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return ExtElem(self.a * other, self.b * other, self.sigma)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a = self.a * other.a + self.b * other.b * self.sigma
        b = self.a * other.b + self.b * other.a
        return ExtElem(a, b, self.sigma)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'ExtElem':
        """Non-negative integer power in the same ring"""
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = ExtElem(ONE, ZERO, self.sigma)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, ExtElem):
            return (self.a, self.b, self.sigma) == (other.a, other.b, other.sigma)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self == other

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.sigma))

    def is_zero(self) -> bool:
        """True when both parts vanish"""
        return self.a.is_zero() and self.b.is_zero()

    def evaluate(self, xi, s):
        """a(ξ) + b(ξ)·s with the (signed) root value supplied by the caller"""
        return self.a.evaluate(xi) + self.b.evaluate(xi) * s

    def __repr__(self) -> str:
        return f"ExtElem(a={self.a}, b={self.b}, sigma={self.sigma})"


def ext_apply_D(elem: ExtElem, weight, sign: int) -> ExtElem:
    """One application of sign·w·∂_ξ, with ∂_ξ s = σ'/(2s).

    ``weight`` is a Poly or an ExtElem of the same ring. The s⁻¹ produced by
    differentiating s is absorbed either by the s-part of the weight or by
    σ dividing the polynomial part of the weight; otherwise the image is
    not in the ring.
    """
    if sign not in (1, -1):
        raise ConfigurationError(f"sign must be ±1, got {sign}")
    sigma = elem.sigma
    w = weight if isinstance(weight, ExtElem) else ExtElem(weight, ZERO, sigma)
    if w.sigma != sigma:
        raise ConfigurationError("weight and element live in different rings")

    plain = ExtElem(elem.a.derive(), elem.b.derive(), sigma) * w
    half_dsigma_b = elem.b * sigma.derive() / 2
    # w_a · b σ'/2 · s⁻¹ = (w_a · b σ'/2 / σ) · s
    quotient, remainder = (w.a * half_dsigma_b).divmod(sigma)
    if not remainder.is_zero():
        raise ConfigurationError(
            f"operator weight {w.a} does not keep the ring s² = {sigma} closed")
    correction = ExtElem(w.b * half_dsigma_b, quotient, sigma)
    return (plain + correction) * sign


@dataclass(frozen=True)
class FirstOrderOperator:
    """sign · weight · ∂_ξ acting on one extension ring"""
    name: str
    weight: ExtElem
    sign: int

    @property
    def sigma(self) -> Poly:
        """σ of the ring the operator acts on"""
        return self.weight.sigma

    def apply(self, elem: ExtElem) -> ExtElem:
        """One application to ``elem``"""
        return ext_apply_D(elem, self.weight, self.sign)

    def power(self, elem: ExtElem, times: int) -> ExtElem:
        """``times`` successive applications"""
        for _ in range(times):
            elem = self.apply(elem)
        return elem


# (1+ξ²)∂_ξ : ∂_x under ξ = tan x
TAN_LIFT = FirstOrderOperator('(1+ξ²)∂', ExtElem(SIGMA_PLUS, ZERO, SIGMA_PLUS), 1)
# −√(1−ξ²)∂_ξ : ∂_x under ξ = cos x on the branch s = sin x
COS_LIFT = FirstOrderOperator('−s∂', ExtElem.root(SIGMA_MINUS), -1)
