"""Upper-degree censuses, cumulative distributions and exponent estimates.

The upper degree of a d-simplex is the number of (d+1)-simplices that contain
it.  A census lists each distinct degree with its multiplicity.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .complex import Complex, Model, build, grow, new_complex
from .counting import (
    CountTable,
    fvector_constrained,
    fvector_for,
    log_numbers,
    max_degree_gap,
    n0_closed,
)
from .errors import DomainError


@dataclass(frozen=True)
class DegreeCensus:
    d: int
    n: int
    entries: tuple[tuple[int, int], ...]
    model: str = "dsc"

    @property
    def degrees(self) -> list[int]:
        return [k for k, _ in self.entries]

    @property
    def total(self) -> int:
        return sum(c for _, c in self.entries)

    @property
    def degree_sum(self) -> int:
        return sum(k * c for k, c in self.entries)

    def multiplicity(self, k: int) -> int:
        for deg, c in self.entries:
            if deg == k:
                return c
        return 0

    def as_lists(self) -> list[list[int]]:
        return [[k, c] for k, c in self.entries]

    def to_json(self) -> str:
        return json.dumps(
            {
                "model": self.model,
                "n": self.n,
                "d": self.d,
                "entries": [[k, str(c)] for k, c in self.entries],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "DegreeCensus":
        obj = json.loads(text)
        entries = tuple((int(k), int(c)) for k, c in obj["entries"])
        return cls(obj["d"], obj["n"], entries, obj["model"])


def _from_counts(d: int, n: int, counts: dict[int, int], model: str) -> DegreeCensus:
    entries = tuple((k, counts[k]) for k in sorted(counts) if counts[k])
    return DegreeCensus(d, n, entries, model)


def upper_degree(c: Complex, s) -> int:
    d, k = c.locate(s)
    return int(c.upper_degrees(d)[k])


def census(c: Complex, d: int) -> DegreeCensus:
    if not 0 <= d <= c.max_dim:
        raise DomainError(f"dimension {d} outside 0..{c.max_dim}")
    values, counts = np.unique(c.upper_degrees(d), return_counts=True)
    entries = tuple((int(k), int(m)) for k, m in zip(values, counts))
    return DegreeCensus(d, c.generation, entries, c.model_name)


def distinct_degrees(c: Complex, d: int) -> list[int]:
    return census(c, d).degrees


def mean_upper_degree(n: int, d: int, model="dsc") -> Fraction:
    """``(d+2) N_{d+1}(n) / N_d(n)`` from exact counts."""
    f = fvector_for(model, n)
    nd = f[d] if 0 <= d < len(f) else 0
    if nd == 0:
        raise DomainError(f"no {d}-simplices at generation {n}")
    nd1 = f[d + 1] if d + 1 < len(f) else 0
    return Fraction((d + 2) * nd1, nd)


def cumulative_distribution(cen: DegreeCensus) -> list[tuple[int, Fraction]]:
    """``p_cum(k) = sum_{q >= k} D(q) / N_d`` at each distinct degree."""
    total = cen.total
    out = []
    tail = total
    for k, c in cen.entries:
        out.append((k, Fraction(tail, total)))
        tail -= c
    return out


# -- exponent estimators --


@dataclass(frozen=True)
class GammaEstimate:
    d: int
    n: int
    gamma: float
    method: str
    details: dict = field(default_factory=dict, compare=False)


def _log_int(x: int) -> float:
    """Natural log of a positive integer of any size."""
    if x <= 0:
        raise DomainError("log of a non-positive count")
    bits = x.bit_length()
    if bits < 1000:
        return math.log(x)
    shift = bits - 64
    return math.log(x >> shift) + shift * math.log(2)


def _endpoint(ln_top: float, ln_low: float, ln_max_degree: float) -> float:
    return 1.0 - (ln_top - ln_low) / ln_max_degree


def gamma_from_census(cen: DegreeCensus) -> GammaEstimate:
    """Endpoint estimator between degree 1 and the largest degree."""
    cum = dict(cumulative_distribution(cen))
    top = cen.degrees[-1]
    if top <= 1:
        raise DomainError("largest degree must exceed 1")
    if 1 in cum:
        p_low = cum[1]
    else:
        # degree 1 absent: the tail above it is the mass of degrees >= 1
        p_low = Fraction(sum(c for k, c in cen.entries if k >= 1), cen.total)
    ln_top = _log_int(cum[top].numerator) - _log_int(cum[top].denominator)
    ln_low = _log_int(p_low.numerator) - _log_int(p_low.denominator)
    g = _endpoint(ln_top, ln_low, math.log(top))
    return GammaEstimate(cen.d, cen.n, g, "endpoint", {"max_degree": top})


def gamma_endpoint(n: int, d: int = 0, model="dsc", route: str = "exact") -> GammaEstimate:
    """Endpoint estimator for the unconstrained model.

    ``route="census"`` enumerates the complex (n <= 8); ``route="exact"`` uses
    the largest degree ``M^(0)(n-d)`` with multiplicity ``d+2`` and the count
    of degree-zero simplices ``N_{d-1}(n-1)``, so it works for any ``n``.
    """
    m = Model.parse(model) if isinstance(model, str) else model
    if route == "census":
        return gamma_from_census(census(build(n, m), d))
    if m.m is not None:
        raise DomainError("exact endpoint route is defined for the unconstrained model")
    if not 0 <= d <= n - 1:
        raise DomainError(f"need 0 <= d <= n-1, got d={d}, n={n}")
    table = CountTable(m)
    nd = table.get(d, n)
    top = log_numbers(n - d)
    if top <= 1:
        raise DomainError("largest degree must exceed 1")
    zeros = table.get(d - 1, n - 1) if d >= 1 else 0
    ln_top = math.log(d + 2) - _log_int(nd)
    ln_low = _log_int(nd - zeros) - _log_int(nd)
    g = _endpoint(ln_top, ln_low, _log_int(top))
    return GammaEstimate(d, n, g, "endpoint", {"max_degree": top})


def gamma_404(n: int, expanded: bool = True) -> GammaEstimate:
    """Large-n vertex-degree exponent, ``2 + 1/n + 1/(n ln n)`` when expanded."""
    if n < 2:
        raise DomainError("need n >= 2")
    if expanded:
        g = 2.0 + 1.0 / n + 1.0 / (n * math.log(n))
    else:
        ln_enf = 1.0 + math.lgamma(n + 1)
        g = 1.0 + ln_enf / (ln_enf - math.log(n))
    return GammaEstimate(0, n, g, "closed_form_d0")


def gamma_405(n: int, delta: float) -> GammaEstimate:
    """Exponent at fixed ratio ``delta = d/n``; exact unexpanded expression."""
    if not 0.0 < delta < 1.0:
        raise DomainError("delta must lie in (0, 1)")
    if n < 3:
        raise DomainError("need n >= 3")
    ln_n = math.log(n)
    num = ln_n + delta / (1.0 - delta) * (math.log(ln_n) - math.log(delta)) - 1.0
    den = ln_n + math.log(1.0 - delta) - 1.0
    if den <= 0:
        raise DomainError("expression undefined at this (n, delta)")
    return GammaEstimate(round(delta * n), n, 1.0 + num / den, "closed_form_delta", {"delta": delta})


def gamma_405_curve(n: int, deltas: Sequence[float]) -> list[tuple[float, float]]:
    return [(x, gamma_405(n, x).gamma) for x in deltas]


# -- closed forms for constrained models --


def dsc1_degree_distribution(n: int) -> DegreeCensus:
    """Vertex degrees of the tree model: ``2^(n-k)`` of degree ``k < n``, two of degree ``n``."""
    if n < 1:
        raise DomainError("need n >= 1")
    counts = {k: 2 ** (n - k) for k in range(1, n)}
    counts[n] = counts.get(n, 0) + 2
    return _from_counts(0, n, counts, "dsc(1)")


def dsc2_vertex_degree_census(n: int) -> DegreeCensus:
    """Vertex degrees of the two-dimensional constrained model by the doubling recursion.

    ``D(1, n) = N_0(n-1)``, ``D(2, n) = N_1(n-1)`` and each degree ``k`` at
    generation ``n-1`` reappears as ``2k+1``.
    """
    if n < 1:
        raise DomainError("need n >= 1")
    counts = {1: 2}
    for g in range(2, n + 1):
        f = fvector_constrained(g - 1, 2)
        nxt = {2 * k + 1: c for k, c in counts.items()}
        nxt[1] = nxt.get(1, 0) + f[0]
        nxt[2] = nxt.get(2, 0) + f[1]
        counts = nxt
    return _from_counts(0, n, counts, "dsc(2)")


def dsc1_distinct_1degrees(n: int) -> list[int]:
    """Distinct degrees ``k_i`` for ``i = 1 .. 2n-1`` of the doubling recursion."""
    if n < 1:
        raise DomainError("need n >= 1")
    out = []
    for i in range(1, 2 * n):
        if i % 2:
            out.append(2 ** ((i + 1) // 2) - 1)
        else:
            out.append(3 * 2 ** (i // 2 - 1) - 1)
    return out


def dsc1_gamma() -> float:
    return math.log(5 + math.sqrt(5)) / math.log(2)


def dsc2_one_degree_distribution(n: int) -> DegreeCensus:
    """Edge upper degrees in the two-dimensional model: exponential decay in ``k``."""
    if n < 2:
        raise DomainError("need n >= 2")
    counts = {0: fvector_constrained(n - 1, 2)[0]}
    for k in range(1, n):
        n1 = fvector_constrained(n - k + 1, 2)[1]
        if (3 * n1) % 5:
            raise DomainError(f"3 N_1({n - k + 1}) / 5 is not an integer")
        counts[k] = 3 * n1 // 5
    return _from_counts(1, n, counts, "dsc(2)")


def dsc3_two_degree_distribution(n: int) -> DegreeCensus:
    """Triangle upper degrees in the three-dimensional model."""
    if n < 3:
        raise DomainError("need n >= 3")
    counts = {0: fvector_constrained(n - 1, 3)[1]}
    for k in range(1, n - 1):
        hi = fvector_constrained(n - k, 3)
        lo = fvector_constrained(n - k - 1, 3)
        n2 = lambda f: f[2] if len(f) > 2 else 0  # noqa: E731
        counts[k] = 4 * (n2(hi) - n2(lo))
    return _from_counts(2, n, counts, "dsc(3)")


# -- conjecture suite --


@dataclass
class ConjectureRow:
    identity: str
    n: int
    d: int
    status: str
    expected: object = None
    actual: object = None

    def as_dict(self) -> dict:
        return {
            "identity": self.identity,
            "n": self.n,
            "d": self.d,
            "status": self.status,
            "expected": _jsonable(self.expected),
            "actual": _jsonable(self.actual),
        }


def _jsonable(x):
    if isinstance(x, int) and not isinstance(x, bool):
        return str(x) if abs(x) >= 2**53 else x
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


@dataclass
class ConjectureReport:
    n_max: int
    rows: list[ConjectureRow] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.status == "pass" for r in self.rows)

    @property
    def failures(self) -> list[ConjectureRow]:
        return [r for r in self.rows if r.status != "pass"]

    def check(self, identity: str, n: int, d: int, expected, actual) -> None:
        ok = expected == actual
        self.rows.append(
            ConjectureRow(
                identity, n, d, "pass" if ok else "fail",
                None if ok else expected, None if ok else actual,
            )
        )

    def summary(self) -> dict[str, tuple[int, int]]:
        out: dict[str, list[int]] = {}
        for r in self.rows:
            tally = out.setdefault(r.identity, [0, 0])
            tally[0 if r.status == "pass" else 1] += 1
        return {k: (v[0], v[1]) for k, v in out.items()}


def codim1_census(n: int) -> list[list[int]]:
    return [[0, (n - 1) * (n + 2) // 2], [1, n + 1]]


def codim2_census(n: int) -> list[list[int]]:
    a = (n - 2) * (n - 1) * n * (3 * n + 11) // 24
    b = n * (n * n + n - 4) // 2
    c = n * (n - 1) // 2
    return [[0, a], [1, b], [2, c], [3, n]]


def verify_degree_conjectures(n_max: int = 8, complexes: dict[int, Complex] | None = None) -> ConjectureReport:
    """Check the upper-degree identities on enumerated complexes up to ``n_max``."""
    from .goldens import CENSUS, DISTINCT_DEGREES, STATIONARY_DEGREES

    if not 2 <= n_max <= 8:
        raise DomainError("n_max must lie in 2..8")
    rep = ConjectureReport(n_max)
    complexes = dict(complexes or {})
    c = complexes.get(0)
    if c is None:
        c = new_complex()
    cens: dict[tuple[int, int], DegreeCensus] = {}
    for n in range(1, n_max + 1):
        c = complexes[n] if n in complexes else grow(c)
        for d in range(n + 1):
            cens[(d, n)] = census(c, d)

    table = CountTable("dsc")
    K = {key: v.degrees for key, v in cens.items()}

    def M(d, n):
        return K[(d, n)][-1]

    def Mt(d, n):
        return K[(d, n)][-2]

    for n in range(1, n_max + 1):
        f = table.row(n)
        for d in range(n + 1):
            q = cens[(d, n)]
            rep.check("mass", n, d, f[d], q.total)
            expected_sum = 2 * f[1] if d == 0 else (d + 2) * (f[d + 1] if d + 1 <= n else 0)
            rep.check("handshake", n, d, expected_sum, q.degree_sum)
            if (d, n) in CENSUS:
                rep.check("census_golden", n, d, [list(e) for e in CENSUS[(d, n)]], q.as_lists())
            if (d, n) in DISTINCT_DEGREES:
                rep.check("distinct_golden", n, d, DISTINCT_DEGREES[(d, n)], q.degrees)
            if d <= n - 1:
                rep.check("max_degree_multiplicity", n, d, d + 2, q.multiplicity(M(d, n)))
            if n >= d + 2:
                rep.check("second_max_multiplicity", n, d, (d + 1) * (d + 2) // 2, q.multiplicity(Mt(d, n)))
            if d >= 1 and n >= d + 1:
                rep.check("distinct_shift", n, d, [0] + K[(0, n - d)], K[(d, n)])
                rep.check("max_degree_shift", n, d, M(0, n - d), M(d, n))
            if d >= 1 and n >= d + 2:
                rep.check("second_max_shift", n, d, Mt(0, n - d), Mt(d, n))
            if n >= 2 and 1 <= d <= n - 1:
                rep.check("zero_degree_count", n, d, table.get(d - 1, n - 1), q.multiplicity(0))
        q0 = cens[(0, n)]
        rep.check("max_vertex_degree", n, 0, log_numbers(n), M(0, n))
        rep.check("sum_rule_excess", n, 0, 2 * f[1] - f[0], sum((k - 1) * c for k, c in q0.entries if k >= 2))
        if n >= 2:
            rep.check("max_degree_gap", n, 0, max_degree_gap(n), M(0, n) - Mt(0, n))
            rep.check("degree_one_count", n, 0, n0_closed(n - 1), q0.multiplicity(1))
            rep.check("edge_zero_count", n, 1, n0_closed(n - 1), cens[(1, n)].multiplicity(0))
            rep.check("degree_two_count", n, 0, table.get(1, n - 1), q0.multiplicity(2))
            rep.check("codim1_census", n, n - 1, codim1_census(n), cens[(n - 1, n)].as_lists())
        if n >= 3:
            rep.check("codim2_census", n, n - 2, codim2_census(n), cens[(n - 2, n)].as_lists())
        rep.check("log_telescope", n, 0, n0_closed(n), log_numbers(n + 1) - log_numbers(n))
        for p, lst in STATIONARY_DEGREES.items():
            if n >= p + 1:
                rep.check("stationary_distinct", n, n - p, lst, K[(n - p, n)])
    return rep
