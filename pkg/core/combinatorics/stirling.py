"""
Stirling numbers of the second kind, Touchard polynomials and the
(ξ∂_ξ)^m operator expansion.

S₂(n, k) is computed by the triangle recurrence and cached in a shared
StirlingTable; the explicit alternating sum is kept for validation.
"""

import logging
import math
import threading
from dataclasses import dataclass
from typing import List, Sequence

from core.algebra.poly import Poly
from core.errors import DomainError

logger = logging.getLogger(__name__)


class StirlingTable:
    """Triangular table of S₂(n, k) for 0 ≤ k ≤ n ≤ n_max"""

    def __init__(self, n_max: int = 0):
        self._rows: List[List[int]] = [[1]]
        self._lock = threading.Lock()
        self.extend(n_max)

    @property
    def n_max(self) -> int:
        return len(self._rows) - 1

    def extend(self, n_max: int) -> None:
        """Grow the table so that rows up to n_max exist"""
        if n_max <= self.n_max:
            return
        with self._lock:
            start = self.n_max
            for n in range(start + 1, n_max + 1):
                prev = self._rows[n - 1]
                row = [0] * (n + 1)
                for k in range(1, n + 1):
                    left = prev[k - 1]
                    up = prev[k] if k < n else 0
                    row[k] = k * up + left
                self._rows.append(row)
            logger.debug("Stirling table extended from n=%d to n=%d", start, n_max)

    def row(self, n: int) -> List[int]:
        if n < 0:
            raise DomainError(f"negative order {n}")
        self.extend(n)
        return list(self._rows[n])

    def __getitem__(self, index) -> int:
        n, k = index
        if n < 0 or k < 0:
            raise DomainError(f"S2({n}, {k}) needs non-negative arguments")
        if k > n:
            return 0
        self.extend(n)
        return self._rows[n][k]


_TABLE = StirlingTable(25)


def stirling_table(n_max: int) -> StirlingTable:
    """Shared table, grown to at least n_max"""
    _TABLE.extend(n_max)
    return _TABLE


def stirling2(n: int, k: int) -> int:
    """S₂(n, k); 0 when k > n"""
    return _TABLE[n, k]


def stirling2_explicit(n: int, k: int) -> int:
    """S₂(n, k) = (1/k!) Σ_j (−1)^{k−j} C(k, j) j^n"""
    if n < 0 or k < 0:
        raise DomainError(f"S2({n}, {k}) needs non-negative arguments")
    if k > n:
        return 0
    total = sum((-1) ** (k - j) * math.comb(k, j) * j ** n for j in range(k + 1))
    return total // math.factorial(k)


def bell_number(n: int) -> int:
    """Bell numbers via B_{n+1} = Σ_k C(n, k) B_k"""
    if n < 0:
        raise DomainError(f"negative order {n}")
    bells = [1]
    for m in range(n):
        bells.append(sum(math.comb(m, k) * bells[k] for k in range(m + 1)))
    return bells[n]


@dataclass(frozen=True)
class TouchardPoly:
    n: int
    coeffs: Poly

    def evaluate(self, x):
        return self.coeffs.evaluate(x)


def touchard(n: int) -> TouchardPoly:
    """T_n(x) = Σ_k S₂(n, k) x^k"""
    return TouchardPoly(n, Poly(_TABLE.row(n)))


def xd_expand_apply(m: int, derivs: Sequence, xi):
    """(ξ∂_ξ)^m f at ξ, i.e. Σ_{r≤m} S₂(m, r) ξ^r f^{(r)}(ξ).

    ``derivs[r]`` must hold f^{(r)}(ξ) for r = 0..m.
    """
    if m < 0:
        raise DomainError(f"negative order {m}")
    if len(derivs) != m + 1:
        raise DomainError(f"expected {m + 1} derivative values, got {len(derivs)}")
    row = _TABLE.row(m)
    total = 0
    power = 1
    for r in range(m + 1):
        if row[r]:
            total = total + row[r] * power * derivs[r]
        power = power * xi
    return total
