"""Exact simplex counts for the unconstrained and constrained growth models.

Everything returns Python integers; floats appear only in
:func:`asymptotic_estimate`, which works in log space.
"""

from __future__ import annotations

import io
import math
import threading
from fractions import Fraction
from math import comb, factorial
from typing import Iterable

from .errors import DomainError, UnsupportedOrder
from .series import RationalSeries

EULER_GAMMA = 0.5772156649015329


def _step(prev: list[int], top: int | None) -> list[int]:
    """One application of the count recursion; ``top`` caps spawning dimensions."""
    spawn = len(prev) if top is None else min(len(prev), top)
    size = len(prev) + 1 if top is None else min(len(prev) + 1, top + 1)
    nxt = []
    for d in range(size):
        acc = prev[d] if d < len(prev) else 0
        for j in range(max(d - 1, 0), spawn):
            acc += comb(j + 1, d) * prev[j]
        nxt.append(acc)
    return nxt


def fvector_recursive(n: int) -> list[int]:
    """f-vector of the unconstrained complex at generation ``n``."""
    if n < 0:
        raise DomainError("generation must be non-negative")
    f = [1]
    for _ in range(n):
        f = _step(f, None)
    return f


def fvector_constrained(n: int, m: int) -> list[int]:
    """f-vector when only simplices of dimension ``< m`` spawn."""
    if n < 0:
        raise DomainError("generation must be non-negative")
    if m < 1:
        raise DomainError(f"constraint m must be >= 1, got {m}")
    f = [1]
    for _ in range(n):
        f = _step(f, m)
    return f


def fvector_for(model, n: int) -> list[int]:
    """Dispatch on a model object or name (``dsc`` / ``dsc(m)``)."""
    from .complex import Model

    if isinstance(model, str):
        model = Model.parse(model)
    if model is None or model.m is None:
        return fvector_recursive(n)
    return fvector_constrained(n, model.m)


def n0_closed(n: int) -> int:
    """Vertex count ``sum_{k<=n} n!/k!``."""
    if n < 0:
        raise DomainError("generation must be non-negative")
    total, term = 0, 1
    # accumulate n!/k! for k = n, n-1, ..., 0
    for k in range(n, -1, -1):
        total += term
        term *= k if k else 1
    return total


def total_simplices(n: int) -> int:
    """All simplices at generation ``n``, via the vertex-count telescope."""
    if n < 0:
        raise DomainError("generation must be non-negative")
    return n0_closed(n + 1) - n0_closed(n)


def nd_series(d: int, order: int) -> RationalSeries:
    """EGF of ``N_d``: ``e^x L^d / ((1-x) d!)`` with ``L = -ln(1-x)``."""
    ld = RationalSeries.neg_log1m(order) ** d
    return (ld.times_exp().over_one_minus_x()) * Fraction(1, factorial(d))


def nd_by_series(d: int, n: int) -> int:
    if d < 0 or n < 0:
        raise DomainError("d and n must be non-negative")
    if d > n:
        return 0
    value = nd_series(d, n).egf_coefficient(n)
    assert value.denominator == 1
    return int(value)


def total_egf(order: int) -> RationalSeries:
    """``e^x / (1-x)^2``."""
    return RationalSeries.exp(order).over_one_minus_x().over_one_minus_x()


_CODIAGONAL = {
    0: (lambda n: 1, 1),
    1: (lambda n: n + 3, 2),
    2: (lambda n: (n + 1) * (3 * n + 14), 12),
    3: (lambda n: n**3 + 8 * n**2 + 11 * n - 4, 8),
    4: (lambda n: 15 * n**4 + 150 * n**3 + 245 * n**2 - 378 * n - 248, 240),
    5: (lambda n: 3 * n**5 + 35 * n**4 + 55 * n**3 - 243 * n**2 - 202 * n + 256, 96),
}


def codiagonal(n: int, p: int) -> int:
    """``N_{n-p}(n) = C(n, p) P_p(n)`` for ``p <= 5``."""
    if p > 5:
        raise UnsupportedOrder(f"no closed form for co-dimension {p}")
    if p < 0 or n < p:
        raise DomainError(f"need 0 <= p <= n, got p={p}, n={n}")
    poly, den = _CODIAGONAL[p]
    num = comb(n, p) * poly(n)
    if num % den:
        raise DomainError(f"co-diagonal value not integral at n={n}, p={p}")
    return num // den


def log_numbers(n: int) -> int:
    """``n! [x^n] (-e^x ln(1-x))``: the largest vertex degree at generation n."""
    if n < 1:
        raise DomainError("logarithmic numbers start at n = 1")
    value = RationalSeries.neg_log1m(n).times_exp().egf_coefficient(n)
    assert value.denominator == 1
    return int(value)


def max_degree_gap(n: int) -> int:
    """``(n-2)! [x^(n-2)] e^x/(1-x)``: gap between the two largest vertex degrees."""
    if n < 2:
        raise DomainError("degree gap needs n >= 2")
    value = RationalSeries.exp(n - 2).over_one_minus_x().egf_coefficient(n - 2)
    return int(value)


def _lfact(k: float) -> float:
    return math.lgamma(k + 1)


ASYMPTOTIC_KINDS = ("N0", "N1", "N", "Nd", "M0", "gap", "Md", "gap_d", "Nnm")


def asymptotic_estimate(kind: str, n: int, d: int = 0) -> float:
    """Natural log of a leading-order estimate.

    ``d`` is the dimension for ``Nd``, ``Md`` and ``gap_d`` and the
    co-dimension for ``Nnm``.
    """
    if n < 2:
        raise DomainError("asymptotic estimates need n >= 2")
    ln_en = 1.0 + _lfact(n)
    if kind == "N0":
        return ln_en
    if kind == "N1":
        return ln_en + math.log(math.log(n) + EULER_GAMMA)
    if kind == "N":
        return ln_en + math.log(n)
    if kind == "Nd":
        return ln_en + d * math.log(math.log(n)) - _lfact(d)
    if kind == "M0":
        return ln_en - math.log(n)
    if kind == "gap":
        return ln_en - math.log(n) - math.log(n - 1)
    if kind == "Md":
        return 1.0 + _lfact(n - d - 1)
    if kind == "gap_d":
        return 1.0 + _lfact(n - d - 2)
    if kind == "Nnm":
        return 2 * d * math.log(n) - d * math.log(2) - _lfact(d)
    raise DomainError(f"unknown asymptotic kind {kind!r}; expected one of {ASYMPTOTIC_KINDS}")


class CountTable:
    """Memoized ``N_d(n)`` rows for one model; safe for concurrent readers."""

    def __init__(self, model="dsc"):
        from .complex import Model

        self.model = Model.parse(model) if isinstance(model, str) else (model or Model())
        self._rows: dict[int, tuple[int, ...]] = {0: (1,)}
        self._lock = threading.Lock()

    def row(self, n: int) -> list[int]:
        if n < 0:
            raise DomainError("generation must be non-negative")
        got = self._rows.get(n)
        if got is not None:
            return list(got)
        with self._lock:
            start = max(k for k in self._rows if k <= n)
            f = list(self._rows[start])
            for k in range(start + 1, n + 1):
                f = _step(f, self.model.m)
                self._rows[k] = tuple(f)
        return list(self._rows[n])

    def get(self, d: int, n: int) -> int:
        r = self.row(n)
        return r[d] if 0 <= d < len(r) else 0

    def rows(self, ns: Iterable[int]) -> dict[tuple[int, int], int]:
        return {(d, n): v for n in ns for d, v in enumerate(self.row(n))}

    def to_csv(self, ns: Iterable[int]) -> str:
        buf = io.StringIO()
        buf.write("model,n,d,N_d\n")
        for n in ns:
            for d, v in enumerate(self.row(n)):
                buf.write(f"{self.model.name},{n},{d},{v}\n")
        return buf.getvalue()
