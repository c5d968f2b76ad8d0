"""Dominant growth rate of the constrained count recursion."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import DomainError
from .polynomial import IntPolynomial, largest_real_root

FIT_CONSTANT = 2.645


def recursion_matrix(m: int) -> list[list[int]]:
    """``A[d][j] = C(j+1, d) + [d == j]`` for ``0 <= d, j < m``."""
    if m < 1:
        raise DomainError(f"constraint m must be >= 1, got {m}")
    return [[comb(j + 1, d) + (d == j) for j in range(m)] for d in range(m)]


def charpoly(a: list[list[int]]) -> IntPolynomial:
    """``det(x I - A)`` by Faddeev-LeVerrier, all divisions exact."""
    n = len(a)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [[0] * n for _ in range(n)]  # M_0 = 0
    c = 1
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        prod = [[sum(a[i][t] * mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            prod[i][i] += c
        mk = prod
        am = [[sum(a[i][t] * mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        tr = sum(am[i][i] for i in range(n))
        assert tr % k == 0
        c = -tr // k
        coeffs[n - k] = c
    return IntPolynomial(coeffs)


@dataclass(frozen=True)
class GrowthRate:
    m: int
    lower: Fraction
    upper: Fraction
    char_poly: IntPolynomial

    @property
    def g_plus(self) -> Fraction:
        return (self.lower + self.upper) / 2

    def __float__(self) -> float:
        return float(self.g_plus)


def g_plus(m: int, precision_bits: int = 64) -> GrowthRate:
    """Largest eigenvalue of the recursion matrix, bracketed to ``precision_bits``."""
    if m < 1:
        raise DomainError(f"constraint m must be >= 1, got {m}")
    p = charpoly(recursion_matrix(m))
    lo, hi = largest_real_root(p, rel_bits=precision_bits)
    return GrowthRate(m, lo, hi, p)


def g_plus_fit_ratio(m: int) -> float:
    """Exact growth rate divided by the empirical fit ``2.645 (m - ln m)``."""
    if m < 2:
        raise DomainError("fit ratio is defined for m >= 2")
    return float(g_plus(m)) / (FIT_CONSTANT * (m - math.log(m)))
