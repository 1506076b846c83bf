"""
Dense univariate polynomials with exact rational coefficients.

Index i of ``coeffs`` is the coefficient of ξ^i. Values are immutable and
always canonical: trailing zeros are stripped, so the zero polynomial has
an empty coefficient tuple and degree -inf.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Tuple, Union

Rational = Fraction
ComplexF = complex
Scalar = Union[Fraction, int, float, complex]


def as_rational(value) -> Fraction:
    """Coerce int / Fraction / str / float (its exact binary value) to Fraction"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(value, (int, str, float)):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as a rational coefficient")


class Poly:
    """Immutable dense polynomial over the rationals"""

    __slots__ = ('_coeffs',)

    def __init__(self, coeffs: Iterable = ()):
        values = [as_rational(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self._coeffs: Tuple[Fraction, ...] = tuple(values)

    @classmethod
    def constant(cls, value) -> 'Poly':
        """The constant polynomial ``value``"""
        return cls([value])

    @classmethod
    def monomial(cls, power: int, coefficient=1) -> 'Poly':
        """coefficient·ξ^power"""
        if power < 0:
            raise ValueError("negative exponent")
        return cls([0] * power + [coefficient])

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        """Coefficients low-to-high, trailing zeros stripped"""
        return self._coeffs

    @property
    def degree(self):
        # -inf sentinel for zero; never fed back into arithmetic
        return len(self._coeffs) - 1 if self._coeffs else -math.inf

    def is_zero(self) -> bool:
        """True for the zero polynomial"""
        return not self._coeffs

    def is_constant(self) -> bool:
        """True when the degree is at most 0"""
        return len(self._coeffs) <= 1

    @property
    def leading(self) -> Fraction:
        """Leading coefficient; 0 for the zero polynomial"""
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def __getitem__(self, power: int) -> Fraction:
        if power < 0:
            raise IndexError("negative exponent")
        return self._coeffs[power] if power < len(self._coeffs) else Fraction(0)

    def parity(self):
        """0 (even), 1 (odd) or None when both parities occur; zero is even"""
        powers = {i % 2 for i, c in enumerate(self._coeffs) if c != 0}
        if len(powers) > 1:
            return None
        return powers.pop() if powers else 0

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly([other])
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> 'Poly':
        return Poly([-c for c in self._coeffs])

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
            return Poly([c * other for c in self._coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, x in enumerate(self._coeffs):
            if x == 0:
                continue
            for j, y in enumerate(other._coeffs):
                out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero scalar")
            return Poly([c / other for c in self._coeffs])
        return NotImplemented

    def __pow__(self, exponent: int) -> 'Poly':
        """Non-negative integer power by repeated squaring"""
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = Poly([1])
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- calculus and evaluation -----------------------------------------

    def derive(self) -> 'Poly':
        """Formal derivative ∂_ξ"""
        return Poly([i * c for i, c in enumerate(self._coeffs)][1:])

    def evaluate(self, x):
        """Horner evaluation; exact for Fraction/int, float/complex otherwise.

        Any value supporting ``*`` and ``+`` with Fractions (a Poly, a Jet)
        is accepted and the result has its type.
        """
        if isinstance(x, (float, complex)):
            acc = 0.0
            for c in reversed(self._coeffs):
                acc = acc * x + float(c)
            return acc
        if isinstance(x, int) and not isinstance(x, bool):
            x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    __call__ = evaluate

    def compose(self, inner: 'Poly') -> 'Poly':
        """self(inner(ξ)) by Horner"""
        result = Poly()
        for c in reversed(self._coeffs):
            result = result * inner + c
        return result

    def divmod(self, divisor: 'Poly') -> Tuple['Poly', 'Poly']:
        """Euclidean (quotient, remainder) with deg remainder < deg divisor"""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        remainder = list(self._coeffs)
        dd = len(divisor._coeffs) - 1
        lead = divisor.leading
        if len(remainder) - 1 < dd:
            return Poly(), self
        quotient = [Fraction(0)] * (len(remainder) - dd)
        for k in range(len(remainder) - 1 - dd, -1, -1):
            factor = remainder[k + dd] / lead
            quotient[k] = factor
            if factor:
                for i, c in enumerate(divisor._coeffs):
                    remainder[k + i] -= factor * c
        return Poly(quotient), Poly(remainder[:dd])

    # -- display ----------------------------------------------------------

    def format(self, var: str = 'ξ') -> str:
        """Human-readable sum of monomials in ``var``"""
        if not self._coeffs:
            return '0'
        parts = []
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                mono = var if i == 1 else f"{var}^{i}"
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return ' + '.join(parts)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self._coeffs]})"


ZERO = Poly()
ONE = Poly([1])
XI = Poly([0, 1])


def poly_add(p: Poly, q: Poly) -> Poly:
    return p + q


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def poly_derive(p: Poly) -> Poly:
    return p.derive()


def poly_eval(p: Poly, x):
    return p.evaluate(x)


def poly_divmod(p: Poly, q: Poly) -> Tuple[Poly, Poly]:
    return p.divmod(q)
