"""
Auxiliary polynomial families.

All evaluators are generic over the scalar: Fraction/int give exact
results, float/complex give floats, and a Poly argument yields the family
member as a polynomial (e.g. ``pn(n, 2*XI, -1)``).

    H_n(x, y)   = n! Σ_r x^{n−2r} y^r / ((n−2r)! r!)
    P_n(x, y)   = n! Σ_r x^{n−2r} y^r (n−r)! / ((n−2r)! r!)
    P_n^ν(x, y) = n!/Γ(ν) Σ_r x^{n−2r} y^r Γ(ν+n−r) / ((n−2r)! r!)
    P_n(z)      = P_n(z, −1)
    U_n(x)      = P_n(2x, −1) / n!
"""

import math
from fractions import Fraction
from typing import List

from core.algebra.poly import Poly, XI
from core.errors import DomainError


def _check_order(n: int) -> None:
    if n < 0:
        raise DomainError(f"order must be non-negative, got {n}")


def _weighted_sum(n: int, x, y, weight):
    total = 0
    for r in range(n // 2 + 1):
        total = total + weight(r) * x ** (n - 2 * r) * y ** r
    return total


def _unit_like(x):
    return x * 0 + 1


def check_nu(nu) -> None:
    """ν may not sit on a pole of Γ"""
    if nu <= 0 and nu == int(nu):
        raise DomainError(f"nu={nu} is a pole of Gamma")


def rising_factorial(nu, k: int):
    """(ν)_k = Γ(ν+k)/Γ(ν) as a product"""
    result = 1
    for i in range(k):
        result = result * (nu + i)
    return result


def falling_factorial(nu, k: int):
    """ν(ν−1)…(ν−k+1)"""
    result = 1
    for i in range(k):
        result = result * (nu - i)
    return result


def real_power(base, nu):
    """base**nu, exact when nu is integral and base rational"""
    if isinstance(base, (int, Fraction)) and nu == int(nu):
        return Fraction(base) ** int(nu)
    return float(base) ** float(nu)


def hermite2(n: int, x, y):
    """Two-variable Hermite H_n(x, y); ∂ⁿ e^{−ax²} = H_n(−2ax, −a) e^{−ax²}"""
    _check_order(n)
    nf = math.factorial(n)
    return _weighted_sum(
        n, x, y, lambda r: nf // (math.factorial(n - 2 * r) * math.factorial(r)))


def hermite2_recurrence(n: int, x, y):
    """H_{k+1} = x H_k + 2k y H_{k−1}"""
    _check_order(n)
    prev, cur = 0, _unit_like(x)
    for k in range(n):
        prev, cur = cur, x * cur + 2 * k * y * prev
    return cur


def pn(n: int, x, y):
    """P_n(x, y); P_{−1} ≡ 0"""
    if n < 0:
        return 0 * x
    nf = math.factorial(n)
    return _weighted_sum(
        n, x, y,
        lambda r: nf * math.factorial(n - r) // (math.factorial(n - 2 * r) * math.factorial(r)))


def pn_nu(n: int, nu, x, y):
    """P_n^ν(x, y); reduces to P_n at ν = 1"""
    check_nu(nu)
    if n < 0:
        return 0 * x
    nf = math.factorial(n)
    return _weighted_sum(
        n, x, y,
        lambda r: (nf // (math.factorial(n - 2 * r) * math.factorial(r)))
        * rising_factorial(nu, n - r))


def pn_one_var(n: int, z):
    """P_n(z) = n! Σ_r (−1)^r z^{n−2r} (n−r)! / ((n−2r)! r!)"""
    _check_order(n)
    nf = math.factorial(n)
    total = 0
    for r in range(n // 2 + 1):
        c = nf * math.factorial(n - r) // (math.factorial(n - 2 * r) * math.factorial(r))
        total = total + (-1) ** r * c * z ** (n - 2 * r)
    return total


def pn_via_one_var(n: int, x: float, y: float) -> float:
    """P_n(x, y) = (−y)^{n/2} P_n(x/√(−y)) for y < 0"""
    if y >= 0:
        raise DomainError("one-variable reduction needs y < 0")
    root = math.sqrt(-y)
    return root ** n * pn_one_var(n, x / root)


def chebyshev_u(n: int, x):
    """U_n by U_{k+1} = 2x U_k − U_{k−1}"""
    _check_order(n)
    prev, cur = 0, _unit_like(x)
    for _ in range(n):
        prev, cur = cur, 2 * x * cur - prev
    return cur


def pn_lower_family(n: int, nu, x):
    """∂ⁿ (1−x²)^{−ν} = (1−x²)^{−ν} P_n^ν(2x/(1−x²), 1/(1−x²)), |x| < 1"""
    check_nu(nu)
    if isinstance(x, int):
        x = Fraction(x)
    if abs(x) >= 1:
        raise DomainError(f"|x| must be < 1, got {x}")
    w = 1 / (1 - x * x)
    return real_power(w, nu) * pn_nu(n, nu, 2 * x * w, w)


def hermite_laplace_coefficients(n: int) -> List[int]:
    """Γ-moments of H_n(σ, σ): entry r is the coefficient of σ^{n−r} times (n−r)!.

    Term r of H_n(xσ, yσ) carries σ^{n−r}, so H_n(σ, σ) keeps the terms
    apart; ∫₀^∞ e^{−σ} σ^k dσ = k! turns them into P_n(x, y) coefficients.
    """
    h = hermite2_recurrence(n, XI, XI)
    return [int(h[n - r] * math.factorial(n - r)) for r in range(n // 2 + 1)]


def pn_coefficients(n: int) -> List[int]:
    """Entry r is the coefficient of x^{n−2r} y^r in P_n(x, y)"""
    p = pn(n, XI, Fraction(1))
    return [int(p[n - 2 * r]) for r in range(n // 2 + 1)]


# Coefficient polynomials for tables. The two-variable families are weight
# homogeneous in x^{n−2r} y^r, so the y = 1 slice is lossless.

def pn_poly(n: int) -> Poly:
    return pn(n, XI, Fraction(1))


def pn_nu_poly(n: int, nu: Fraction) -> Poly:
    return pn_nu(n, Fraction(nu), XI, Fraction(1))


def hermite_poly(n: int) -> Poly:
    return hermite2(n, XI, Fraction(1))


def pn_one_var_poly(n: int) -> Poly:
    return pn_one_var(n, XI)


def chebyshev_u_poly(n: int) -> Poly:
    return chebyshev_u(n, XI)
