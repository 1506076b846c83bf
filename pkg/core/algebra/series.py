"""
Truncated formal power series in t with ring-valued coefficients.

The coefficient ring is anything supporting +, −, × and scaling by a
Fraction: Poly for the Π/Q/Λ/P_n(z) generating functions, ExtElem for Δ.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import List, Sequence

from core.algebra.poly import Poly, ZERO, ONE
from core.algebra.ext_ring import ExtElem
from core.errors import DomainError


def _constant_value(elem):
    if isinstance(elem, Poly):
        return elem[0] if elem.is_constant() else None
    if isinstance(elem, ExtElem):
        return elem.a[0] if elem.b.is_zero() and elem.a.is_constant() else None
    return None


class SeriesInT:
    """Σ_{k≤order} c_k t^k, truncated consistently at ``order``"""

    __slots__ = ('coeffs', 'order', 'zero')

    def __init__(self, coeffs: Sequence, order: int, zero=ZERO):
        if order < 0:
            raise DomainError("series order must be non-negative")
        values = list(coeffs)[:order + 1]
        values += [zero] * (order + 1 - len(values))
        self.coeffs: List = values
        self.order = order
        self.zero = zero

    @classmethod
    def from_scalars(cls, values: Sequence[Fraction], order: int, one=ONE) -> 'SeriesInT':
        zero = one * 0
        return cls([one * Fraction(v) for v in values], order, zero)

    @classmethod
    def variable(cls, order: int, one=ONE) -> 'SeriesInT':
        """The series t"""
        return cls.from_scalars([0, 1], order, one)

    def coefficient(self, k: int):
        return self.coeffs[k] if k <= self.order else self.zero

    def egf_coefficient(self, k: int):
        """k! · c_k, the k-th member of an exponential generating function"""
        return self.coefficient(k) * math.factorial(k)

    def _lift(self, other) -> 'SeriesInT':
        if isinstance(other, SeriesInT):
            return other
        return SeriesInT([self.zero + other], self.order, self.zero)

    def __add__(self, other) -> 'SeriesInT':
        other = self._lift(other)
        order = min(self.order, other.order)
        return SeriesInT([self.coeffs[k] + other.coeffs[k] for k in range(order + 1)],
                         order, self.zero)

    __radd__ = __add__

    def __neg__(self) -> 'SeriesInT':
        return SeriesInT([-c for c in self.coeffs], self.order, self.zero)

    def __sub__(self, other) -> 'SeriesInT':
        return self + (-self._lift(other))

    def __rsub__(self, other) -> 'SeriesInT':
        return self._lift(other) + (-self)

    def __mul__(self, other) -> 'SeriesInT':
        if not isinstance(other, SeriesInT):
            # ring element or Fraction: coefficient-wise
            return SeriesInT([c * other for c in self.coeffs], self.order, self.zero)
        order = min(self.order, other.order)
        out = []
        for n in range(order + 1):
            acc = self.zero
            for k in range(n + 1):
                acc = acc + self.coeffs[k] * other.coeffs[n - k]
            out.append(acc)
        return SeriesInT(out, order, self.zero)

    def __rmul__(self, other) -> 'SeriesInT':
        return SeriesInT([other * c for c in self.coeffs], self.order, self.zero)

    def __pow__(self, exponent: int) -> 'SeriesInT':
        if not isinstance(exponent, int) or exponent < 0:
            raise DomainError("only non-negative integer powers are supported")
        result = SeriesInT([self.zero + 1], self.order, self.zero)
        for _ in range(exponent):
            result = result * self
        return result

    def inverse(self) -> 'SeriesInT':
        """1/self; the constant coefficient must be a nonzero constant"""
        u = _constant_value(self.coeffs[0])
        if u is None or u == 0:
            raise DomainError("series constant term is not a unit")
        inv_u = 1 / Fraction(u)
        out = [(self.zero + 1) * inv_u]
        for n in range(1, self.order + 1):
            acc = self.zero
            for k in range(1, n + 1):
                acc = acc + self.coeffs[k] * out[n - k]
            out.append(acc * (-inv_u))
        return SeriesInT(out, self.order, self.zero)

    def __truediv__(self, other) -> 'SeriesInT':
        if isinstance(other, SeriesInT):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, SeriesInT):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"SeriesInT(order={self.order}, coeffs={self.coeffs!r})"
