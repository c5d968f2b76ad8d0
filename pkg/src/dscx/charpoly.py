"""Characteristic polynomials of the tree model (constraint m = 1).

The adjacency polynomial ``U_n`` and the Laplacian factors ``pi_i`` follow
squaring recursions, so coefficients are built with exact integer
polynomials and point values with exact homogeneous integers.  The same
recursion code runs on :class:`IntPolynomial`, on exact point values and on
``mpfr`` floats.
"""

from __future__ import annotations

import hashlib
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np
import scipy.linalg

from .complex import Model, adjacency_matrix, build
from .errors import DomainError, ResourceGuardError
from .hodge import SpectrumReport, complex_spectrum, spectrum
from .polynomial import IntPolynomial

try:
    import gmpy2
    from gmpy2 import mpz as _big
except ImportError:  # pragma: no cover
    gmpy2 = None
    _big = int

MAX_COEFF_GENERATION = 14
MAX_EXACT_EVAL_GENERATION = 22
LAMBDA2_LIMIT = 1.77525

# SHA-256 of the space-separated ascending coefficients, locked after first computation
PI_DIGESTS = {
    8: "c9fd3ea43459fc93e5679825616a07a6a251aa1844909ddfde197ba36e32ed4e",
    9: "32c8b5ef5e80865f71cb9b086a87146cb46c42dbb5710f69a67d47a43e94e468",
}

LAM = IntPolynomial.x()
ONE = IntPolynomial.constant(1)


def _guard_coeffs(n: int, limit: int | None) -> None:
    limit = MAX_COEFF_GENERATION if limit is None else limit
    if n > limit:
        raise ResourceGuardError(
            f"coefficient expansion at generation {n} (degree {2**n})",
            f"MAX_COEFF_GENERATION={limit}",
            "max_generation=... (--ack-resources)",
        )


# -- adjacency --


def adjacency_sequence(n: int, max_generation: int | None = None) -> list[IntPolynomial]:
    """``[U_1, ..., U_n]``."""
    if n < 1:
        raise DomainError("need n >= 1")
    _guard_coeffs(n, max_generation)
    ups = [LAM * LAM - 1]
    prod = ONE  # prod_{i<=k-1} U_i
    for _ in range(1, n):
        cur = ups[-1]
        ups.append(cur * cur - (LAM * prod) * (LAM * prod))
        prod = prod * cur
    return ups


def adjacency_charpoly(n: int, max_generation: int | None = None) -> IntPolynomial:
    return adjacency_sequence(n, max_generation)[-1]


def omega(n: int, max_generation: int | None = None) -> IntPolynomial:
    """Factor with ``U_n(x) = Omega_n(x) Omega_n(-x)`` for ``n >= 2``."""
    if n < 2:
        raise DomainError("need n >= 2")
    ups = adjacency_sequence(n - 1, max_generation)
    prod = ONE
    for u in ups[:-1]:
        prod = prod * u
    return ups[-1] + LAM * prod


@dataclass
class CoefficientReport:
    name: str
    n: int
    rows: list[tuple[str, int, int, bool]] = field(default_factory=list)

    def expect(self, label: str, expected: int, actual: int) -> None:
        self.rows.append((label, expected, actual, expected == actual))

    @property
    def passed(self) -> bool:
        return all(r[3] for r in self.rows)

    @property
    def mismatches(self) -> list[tuple[str, int, int, bool]]:
        return [r for r in self.rows if not r[3]]


def adjacency_coeff_check(n: int) -> CoefficientReport:
    if n < 4:
        raise DomainError("coefficient formulas hold from n = 4")
    rep = CoefficientReport("adjacency", n)
    u = adjacency_charpoly(n)
    top = 2**n
    a2 = -(2**n - 1)
    a4 = 2 ** (2 * n - 1) - 7 * 2 ** (n - 1) + 2 * n + 3
    rep.expect("degree", top, u.degree)
    rep.expect("U[0]", 1, u[0])
    rep.expect("U[2]", a2, u[2])
    rep.expect("U[4]", a4, u[4])
    rep.expect("U[top]", 1, u[top])
    rep.expect("U[top-2]", a2, u[top - 2])
    rep.expect("U[top-4]", a4, u[top - 4])
    rep.expect("odd part", 0, int(bool(u.odd_part())))
    if n >= 5:
        om = omega(n)
        rep.expect("Omega(x) Omega(-x) == U", 1, int(om * om.reflect() == u))
        h = 2 ** (n - 1)
        b2 = -(2 ** (n - 1) - 1)
        b3 = 2 ** (n - 1) - n
        b4 = 2 ** (2 * n - 3) - 7 * 2 ** (n - 2) + 2 * n + 1
        for label, exp, act in (
            ("Omega[0]", 1, om[0]),
            ("Omega[1]", -1, om[1]),
            ("Omega[2]", b2, om[2]),
            ("Omega[3]", b3, om[3]),
            ("Omega[4]", b4, om[4]),
            ("Omega[top]", 1, om[h]),
            ("Omega[top-1]", 1, om[h - 1]),
            ("Omega[top-2]", b2, om[h - 2]),
            ("Omega[top-3]", -b3, om[h - 3]),
            ("Omega[top-4]", b4, om[h - 4]),
        ):
            rep.expect(label, exp, act)
    return rep


# -- Laplacian factors --


def _laplacian_recursion(lam, n: int):
    """Yield ``(k, pi_k, theta_k, sigma_k, sigma_tilde_k)`` for k = 1..n.

    ``lam`` may be an IntPolynomial, an exact point value or a float-like;
    entries not defined at a given k are ``None``.
    """
    pi = 2 - lam
    yield 1, pi, None, None, None
    if n < 2:
        return
    pi = pi * pi - 2
    yield 2, pi, None, None, None
    if n < 3:
        return
    theta = 1 - lam
    theta_sq_prod = theta * theta  # prod_{i=3}^{k} theta_i^2
    pi = pi * pi - 2 * theta_sq_prod
    yield 3, pi, theta, None, None
    if n < 4:
        return
    theta = theta * theta - lam
    theta_sq_prod = theta_sq_prod * (theta * theta)
    pi = pi * pi - 2 * theta_sq_prod
    yield 4, pi, theta, None, None
    sigma, sigma_t = 2, 1
    # prefix[j] = prod_{i=5}^{j} sigma_i sigma~_i, empty product = 1
    prefix: dict[int, object] = {4: 1}
    for k in range(5, n + 1):
        inner = prefix[k - 2] if k - 2 >= 5 else 1
        sigma, sigma_t = sigma * sigma_t - lam * inner, sigma_t * sigma_t - lam * inner
        prefix[k] = prefix[k - 1] * (sigma * sigma_t)
        theta = theta * theta - lam * prefix[k]
        theta_sq_prod = theta_sq_prod * (theta * theta)
        pi = pi * pi - 2 * theta_sq_prod
        yield k, pi, theta, sigma, sigma_t
        prefix.pop(k - 3, None)


@dataclass
class PiBundle:
    n: int
    pi: list[IntPolynomial]
    theta: dict[int, IntPolynomial]
    sigma: dict[int, IntPolynomial]
    sigma_tilde: dict[int, IntPolynomial]

    def factor(self, i: int) -> IntPolynomial:
        return self.pi[i - 1]

    def product(self) -> IntPolynomial:
        """``Pi_n = -x prod_i pi_i``."""
        acc = ONE
        for p in self.pi:
            acc = acc * p
        return -(acc.shift(1))

    def export_lines(self) -> list[str]:
        return [f"pi {i} : " + " ".join(map(str, p.coeffs)) for i, p in enumerate(self.pi, 1)]


def laplacian_charpoly_bundle(n: int, max_generation: int | None = None) -> PiBundle:
    if n < 1:
        raise DomainError("need n >= 1")
    _guard_coeffs(n, max_generation)
    pis, th, sg, st = [], {}, {}, {}
    for k, p, t, s, s_t in _laplacian_recursion(LAM, n):
        pis.append(p)
        if t is not None:
            th[k] = t
        if s is not None:
            sg[k], st[k] = IntPolynomial._coerce(s), IntPolynomial._coerce(s_t)
    return PiBundle(n, pis, th, sg, st)


def pi_digest(p: IntPolynomial) -> str:
    return hashlib.sha256(" ".join(map(str, p.coeffs)).encode()).hexdigest()


def pi_coeff_check(n: int, bundle: PiBundle | None = None) -> CoefficientReport:
    if n < 3:
        raise DomainError("coefficient formulas hold from n = 3")
    bundle = bundle if bundle is not None and bundle.n >= n else laplacian_charpoly_bundle(n)
    rep = CoefficientReport("laplacian", n)
    p = bundle.factor(n)
    h = 2 ** (n - 1)
    rep.expect("degree", h, p.degree)
    rep.expect("pi[0]", 2, p[0])
    rep.expect("pi[1]", -n * 2 ** (n - 1), p[1])
    rep.expect("pi[top]", 1, p[h])
    rep.expect("pi[top-1]", -(2**n), p[h - 1])
    big = PiBundle(n, bundle.pi[:n], {}, {}, {}).product()
    top = 2**n
    rep.expect("Pi degree", top, big.degree)
    rep.expect("Pi[0]", 0, big[0])
    rep.expect("Pi[1]", -(2**n), big[1])
    rep.expect("Pi[2]", 2 ** (n - 1) * (1 + (n - 1) * 2**n), big[2])
    rep.expect("Pi[top]", 1, big[top])
    rep.expect("Pi[top-1]", -(2 ** (n + 1) - 2), big[top - 1])
    return rep


# -- exact point evaluation --


class _Hom:
    """Exact value ``num / q**deg`` for a fixed positive denominator ``q``."""

    __slots__ = ("num", "deg", "q")

    def __init__(self, num, deg: int, q):
        self.num, self.deg, self.q = num, deg, q

    def _lift(self, other) -> "_Hom":
        if isinstance(other, _Hom):
            return other
        return _Hom(_big(other), 0, self.q)

    def _align(self, other: "_Hom"):
        if self.deg == other.deg:
            return self.num, other.num, self.deg
        if self.deg > other.deg:
            return self.num, other.num * self.q ** (self.deg - other.deg), self.deg
        return self.num * self.q ** (other.deg - self.deg), other.num, other.deg

    def __add__(self, other):
        a, b, d = self._align(self._lift(other))
        return _Hom(a + b, d, self.q)

    __radd__ = __add__

    def __sub__(self, other):
        a, b, d = self._align(self._lift(other))
        return _Hom(a - b, d, self.q)

    def __rsub__(self, other):
        a, b, d = self._lift(other)._align(self)
        return _Hom(a - b, d, self.q)

    def __mul__(self, other):
        o = self._lift(other)
        return _Hom(self.num * o.num, self.deg + o.deg, self.q)

    __rmul__ = __mul__

    def sign(self) -> int:
        return (self.num > 0) - (self.num < 0)

    def to_fraction(self) -> Fraction:
        return Fraction(int(self.num), int(self.q) ** self.deg)


def _point(x: Fraction) -> _Hom:
    x = Fraction(x)
    return _Hom(_big(x.numerator), 1, _big(x.denominator))


def evaluate_pi(n: int, x) -> Fraction:
    """``pi_n(x)`` exactly, without expanding coefficients."""
    if n < 1:
        raise DomainError("need n >= 1")
    val = None
    for _, p, *_ in _laplacian_recursion(_point(x), n):
        val = p
    return val.to_fraction() if isinstance(val, _Hom) else Fraction(val)


def pi_signs(n: int, x, mode: str = "exact", precision: int = 256) -> list[int]:
    """Signs of ``pi_1(x) .. pi_n(x)``."""
    if mode == "exact":
        lam = _point(x)
        return [p.sign() for _, p, *_ in _laplacian_recursion(lam, n)]
    if gmpy2 is None:  # pragma: no cover
        raise DomainError("mpfr evaluation needs gmpy2")
    with gmpy2.local_context(gmpy2.get_context(), precision=precision):
        x = Fraction(x)
        lam = gmpy2.mpfr(x.numerator) / x.denominator
        out = []
        for _, p, *_ in _laplacian_recursion(lam, n):
            out.append((p > 0) - (p < 0))
        return out


def _product_sign(n: int, x, mode: str) -> int:
    s = 1
    for v in pi_signs(n, x, mode):
        s *= v
    return s


@dataclass(frozen=True)
class Lambda2Result:
    n: int
    lower: Fraction
    upper: Fraction
    mode: str

    @property
    def value(self) -> float:
        return float((self.lower + self.upper) / 2)

    @property
    def scaled(self) -> float:
        """``lambda_2 * 2**n``."""
        return self.value * 2.0**self.n


def lambda2_exact(n: int, rel_tol: float = 1e-12, mode: str = "auto") -> Lambda2Result:
    """Smallest positive Laplacian eigenvalue of the generation-n tree by sign bisection."""
    if n < 1:
        raise DomainError("need n >= 1")
    if mode == "auto":
        mode = "exact" if n <= MAX_EXACT_EVAL_GENERATION else "mpfr"
    lo = Fraction(1, 2 ** (n + 2))
    hi = Fraction(4, 2**n)
    # the product of factors is positive just above zero
    bracket = None
    for _ in range(9):
        x_prev, x = lo, lo
        # upward geometric scan: the next eigenvalue sits close above the smallest one
        while x < hi:
            x = min(hi, x * Fraction(9, 8))
            if _product_sign(n, x, mode) <= 0:
                bracket = (x_prev, x)
                break
            x_prev = x
        if bracket:
            break
        lo, hi = lo / 2, hi * 2
    if bracket is None:
        raise DomainError(f"no sign change found for n={n}")
    lo, hi = bracket
    while hi - lo > rel_tol * hi:
        mid = (lo + hi) / 2
        # snap to a short dyadic so point values stay compact
        k = max(0, (hi - lo).denominator.bit_length() + 2)
        mid = Fraction(round(mid * 2**k), 2**k) if k < 4096 else mid
        if not lo < mid < hi:
            mid = (lo + hi) / 2
        s = _product_sign(n, mid, mode)
        if s == 0:
            return Lambda2Result(n, mid, mid, mode)
        if s > 0:
            lo = mid
        else:
            hi = mid
    return Lambda2Result(n, lo, hi, mode)


# -- matrix routes --


def tree(n: int):
    return build(n, Model(1))


def dsc1_spectrum(n: int, ack_resources: bool = False) -> SpectrumReport:
    """Laplacian spectrum of the generation-n tree by dense eigensolve."""
    if n > 13 and not ack_resources:
        raise ResourceGuardError(
            f"dense tree spectrum at generation {n}", "n <= 13", "--ack-resources"
        )
    return complex_spectrum(tree(n), 0, max_size=10**9 if ack_resources else 10_000)


def _clusters(report: SpectrumReport) -> list[tuple[float, float, int]]:
    out = []
    vals = report.eigenvalues
    start = 0
    for i in range(1, len(vals) + 1):
        if i == len(vals) or vals[i] - vals[i - 1] > report.tol_deg:
            out.append((float(vals[start]), float(vals[i - 1]), i - start))
            start = i
    return out


@dataclass
class RootCountReport:
    n: int
    total_roots: int
    expected_total: int
    cell_mismatches: list[tuple[float, int, int]]

    @property
    def passed(self) -> bool:
        return self.total_roots == self.expected_total and not self.cell_mismatches


def laplacian_root_count_check(n: int, report: SpectrumReport | None = None) -> RootCountReport:
    """Count roots of every factor by exact sign changes across eigenvalue cells.

    Cells are bounded by midpoints between neighbouring eigenvalue clusters.
    The count per cell must match the cluster multiplicity and the total must
    equal ``2^n - 1``, the degree of the factor product.
    """
    report = report or dsc1_spectrum(n)
    clusters = [c for c in _clusters(report) if c[1] > report.tol_zero]
    edges = [Fraction(clusters[0][0] / 2)]
    for a, b in zip(clusters, clusters[1:]):
        edges.append(Fraction((a[1] + b[0]) / 2))
    edges.append(Fraction(clusters[-1][1] + 1.0))
    signs = [pi_signs(n, e) for e in edges]
    total = 0
    mismatches = []
    for j, (lo_v, hi_v, mult) in enumerate(clusters):
        got = sum(1 for a, b in zip(signs[j], signs[j + 1]) if a != b)
        total += got
        if got != mult:
            mismatches.append(((lo_v + hi_v) / 2, mult, got))
    return RootCountReport(n, total, 2**n - 1, mismatches)


def polynomial_residuals(poly: IntPolynomial, points: Iterable[float]) -> list[float]:
    """Backward-error residuals ``|p(x)| / sum_j |c_j| |x|^j``, evaluated exactly at each float."""
    coeffs = [_big(c) for c in poly.coeffs]
    abs_coeffs = [abs(c) for c in coeffs]
    out = []
    for x in points:
        fx = Fraction(float(x))
        num, den = _big(fx.numerator), _big(fx.denominator)
        val = _horner_homogeneous(coeffs, num, den)
        scale = _horner_homogeneous(abs_coeffs, abs(num), den)
        out.append(0.0 if scale == 0 else abs(float(Fraction(int(val), int(scale)))))
    return out


def _horner_homogeneous(coeffs, num, den):
    """``p(num/den) * den**deg`` as an integer."""
    acc = _big(0)
    power = _big(1)
    for c in reversed(coeffs):
        acc = acc * num + c * power
        power = power * den
    return acc


# -- exact eigenvalue counting on the tree --


def _tree_order(n: int):
    c = tree(n)
    size = c.next_vertex_id
    nbrs: list[list[int]] = [[] for _ in range(size)]
    for a, b in c.simplices(1) if c.max_dim >= 1 else ():
        nbrs[a].append(b)
        nbrs[b].append(a)
    parent = [-1] * size
    order = [0]
    seen = [False] * size
    seen[0] = True
    for v in order:
        for w in nbrs[v]:
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                order.append(w)
    degree = [len(x) for x in nbrs]
    return order, parent, degree


def count_eigenvalues_below(n: int, x, _cache: dict = {}) -> int:
    """Number of Laplacian eigenvalues ``< x`` of the generation-n tree, exactly.

    Leaf-to-root elimination of ``L - x I`` gives a congruent diagonal matrix;
    by Sylvester's law of inertia its negative entries count the eigenvalues
    below ``x``.
    """
    if n not in _cache:
        _cache[n] = _tree_order(n)
    order, parent, degree = _cache[n]
    x = Fraction(x)
    mpq = gmpy2.mpq if gmpy2 is not None else Fraction
    xq = mpq(x.numerator, x.denominator)
    acc = [mpq(0)] * len(order)  # sum of 1/pivot over children
    negatives = 0
    for v in reversed(order):
        pivot = degree[v] - xq - acc[v]
        if pivot == 0:
            raise DomainError(f"x={x} is an eigenvalue of a branch; choose another point")
        if pivot < 0:
            negatives += 1
        if parent[v] >= 0:
            acc[parent[v]] += 1 / pivot
    return negatives


@dataclass(frozen=True)
class StaircaseCheck:
    n_tilde: int
    n: int
    below: int
    at_or_below: int
    expected: Fraction

    @property
    def g_cum(self) -> Fraction:
        return Fraction(self.at_or_below, 2**self.n)

    @property
    def passed(self) -> bool:
        return self.g_cum == self.expected and self.below < self.at_or_below


def staircase_identity_check(n_tilde: int, n: int, rel_tol: float = 2.0**-48) -> StaircaseCheck:
    """``g_cum(lambda_2(n~), n) = 2^-n~ + 2^-n`` with exact eigenvalue counts.

    ``lambda_2(n~)`` is bracketed to ``rel_tol`` and the counts below and just
    above the bracket are taken by exact inertia.
    """
    if not 1 <= n_tilde <= n:
        raise DomainError("need 1 <= n~ <= n")
    if n_tilde == 1:
        lo = hi = Fraction(2)  # the single edge has eigenvalue 2
        lo, hi = lo - Fraction(1, 2**40), hi + Fraction(1, 2**40)
    else:
        r = lambda2_exact(n_tilde, rel_tol)
        lo, hi = r.lower, r.upper
        if lo == hi:
            lo, hi = lo * (1 - Fraction(1, 2**50)), hi * (1 + Fraction(1, 2**50))
    below = count_eigenvalues_below(n, lo)
    upto = count_eigenvalues_below(n, hi)
    expected = Fraction(1, 2**n_tilde) + Fraction(1, 2**n)
    return StaircaseCheck(n_tilde, n, below, upto, expected)


# -- adjacency spectra --


@dataclass
class AdjacencyStats:
    rows: list[dict]
    lambda_max_intercept: float
    lambda_max_slope: float
    fit_min_n: int
    tail_B: float
    tail_n: int
    lambda_min_scaled: dict[int, float]


def adjacency_eigenvalues(n: int) -> np.ndarray:
    a = adjacency_matrix(tree(n)).toarray().astype(np.float64)
    return scipy.linalg.eigvalsh(a)


def cumulative_from_above(values: np.ndarray, tol: float = 1e-9) -> list[tuple[float, float]]:
    """``rho_cum(lambda)``: fraction of eigenvalues ``>= lambda`` at each distinct value, descending."""
    w = np.sort(values)[::-1]
    size = len(w)
    out = []
    i = 0
    while i < size:
        j = i
        while j + 1 < size and w[i] - w[j + 1] <= tol:
            j += 1
        out.append((float(w[i:j + 1].mean()), (j + 1) / size))
        i = j + 1
    return out


def gaussian_tail_coefficient(values: np.ndarray, quantile: float = 0.25) -> float:
    """Slope of ``-ln rho_cum`` against ``lambda^2`` over the top distinct eigenvalues."""
    stair = cumulative_from_above(values)
    k = max(3, int(len(stair) * quantile))
    top = stair[:k]
    x = np.array([lam * lam for lam, _ in top])
    y = np.array([-math.log(r) for _, r in top])
    return float(np.polyfit(x, y, 1)[0])


def adjacency_spectrum_stats(ns: Sequence[int], fit_min_n: int = 4, tail_n: int | None = None) -> AdjacencyStats:
    """Largest and smallest positive eigenvalues and the Gaussian tail fit per generation."""
    if max(ns) > 13:
        raise ResourceGuardError("adjacency spectra beyond n = 13", "n <= 13", "--ack-resources")
    rows = []
    spectra = {}
    for n in ns:
        w = adjacency_eigenvalues(n)
        spectra[n] = w
        pos = w[w > 1e-9]
        rows.append({"n": n, "lambda_max": float(w[-1]), "lambda_min": float(pos.min())})
    sel = [r for r in rows if r["n"] >= fit_min_n]
    if len(sel) < 2:
        raise DomainError("need at least two generations in the extrapolation window")
    inv = np.array([1.0 / r["n"] for r in sel])
    ratio = np.array([r["lambda_max"] / math.sqrt(r["n"]) for r in sel])
    slope, intercept = np.polyfit(inv, ratio, 1)
    tail_n = tail_n if tail_n is not None else max(ns)
    b = gaussian_tail_coefficient(spectra[tail_n])
    scaled = {r["n"]: r["lambda_min"] * math.sqrt(r["n"]) for r in rows}
    return AdjacencyStats(rows, float(intercept), float(slope), fit_min_n, b, tail_n, scaled)


def adjacency_residual_check(n: int, tol: float = 1e-8) -> float:
    """Largest backward-error residual of the tree adjacency eigenvalues in ``U_n``."""
    w = adjacency_eigenvalues(n)
    res = polynomial_residuals(adjacency_charpoly(n), w)
    return max(res)


def laplacian_residual_check(n: int, report: SpectrumReport | None = None) -> float:
    report = report or dsc1_spectrum(n)
    big = laplacian_charpoly_bundle(n).product()
    return max(polynomial_residuals(big, report.eigenvalues))


# -- matching polynomial oracle --


def matching_polynomial(n: int) -> IntPolynomial:
    """``sum_k (-1)^k M_k x^(N-2k)`` by brute-force enumeration of edge matchings."""
    if n > 4:
        raise ResourceGuardError("brute-force matchings beyond n = 4", "n <= 4", "not overridable")
    c = tree(n)
    size = c.next_vertex_id
    edges = list(c.simplices(1)) if c.max_dim >= 1 else []
    counts = [0] * (size // 2 + 1)
    for r in range(len(counts)):
        for combo in itertools.combinations(edges, r):
            used = [v for e in combo for v in e]
            if len(set(used)) == len(used):
                counts[r] += 1
    coeffs = [0] * (size + 1)
    for k, m in enumerate(counts):
        coeffs[size - 2 * k] += (-1) ** k * m
    return IntPolynomial(coeffs)


def matching_polynomial_check(n: int) -> bool:
    return matching_polynomial(n) == adjacency_charpoly(n)
