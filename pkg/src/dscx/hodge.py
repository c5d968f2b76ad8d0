"""Signed incidence matrices, Hodge Laplacians and their spectra.

Orientation follows the ascending vertex order of each simplex: deleting the
p-th vertex gives a facet with sign ``(-1)**p``.  Laplacians are assembled
as exact int64 sparse matrices; spectra come from a dense symmetric
eigensolver.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np
import scipy.linalg
from scipy import sparse

from .complex import Complex, Model, build
from .errors import ContractViolation, DomainError, InsufficientData, ResourceGuardError

MAX_DENSE_SIZE = 10_000
MAX_EXACT_RANK_SIZE = 200
ZERO_RTOL = 1e-9
DEGENERACY_RTOL = 1e-8


@dataclass(frozen=True)
class SignedIncidence:
    d: int
    n_rows: int
    n_cols: int
    rows: np.ndarray
    cols: np.ndarray
    signs: np.ndarray

    def to_sparse(self) -> sparse.csr_matrix:
        return sparse.csr_matrix(
            (self.signs, (self.rows, self.cols)), shape=(self.n_rows, self.n_cols), dtype=np.int64
        )

    def to_dense(self) -> np.ndarray:
        return self.to_sparse().toarray()

    def triplets(self) -> list[tuple[int, int, int]]:
        return list(zip(self.rows.tolist(), self.cols.tolist(), self.signs.tolist()))


def incidence(c: Complex, d: int) -> SignedIncidence:
    """Boundary map from d-chains to (d-1)-chains."""
    if not 1 <= d <= c.max_dim:
        raise DomainError(f"incidence dimension {d} outside 1..{c.max_dim}")
    idx = c.index()
    simplices = c.simplices(d)
    k = d + 1
    rows = np.empty(len(simplices) * k, dtype=np.int64)
    signs = np.tile(np.array([(-1) ** p for p in range(k)], dtype=np.int64), len(simplices))
    cols = np.repeat(np.arange(len(simplices), dtype=np.int64), k)
    pos = 0
    for s in simplices:
        for p in range(k):
            rows[pos] = idx[s[:p] + s[p + 1:]][1]
            pos += 1
    return SignedIncidence(d, len(c.simplices(d - 1)), len(simplices), rows, cols, signs)


def boundary_composition_is_zero(c: Complex, d: int) -> bool:
    """``B^(d) B^(d+1) == 0`` exactly in integer arithmetic."""
    prod = incidence(c, d).to_sparse() @ incidence(c, d + 1).to_sparse()
    prod.eliminate_zeros()
    return prod.nnz == 0


def hodge_laplacian(c: Complex, d: int) -> sparse.csr_matrix:
    """``L^(d) = B_d^T B_d + B_{d+1} B_{d+1}^T`` as an exact int64 sparse matrix."""
    if not 0 <= d <= c.max_dim:
        raise DomainError(f"Laplacian dimension {d} outside 0..{c.max_dim}")
    size = len(c.simplices(d))
    lap = sparse.csr_matrix((size, size), dtype=np.int64)
    if d >= 1:
        b = incidence(c, d).to_sparse()
        lap = lap + (b.T @ b)
    if d + 1 <= c.max_dim:
        b = incidence(c, d + 1).to_sparse()
        lap = lap + (b @ b.T)
    lap = sparse.csr_matrix(lap)
    lap.eliminate_zeros()
    return lap


def infinity_norm(matrix) -> float:
    if sparse.issparse(matrix):
        return float(abs(matrix).sum(axis=1).max()) if matrix.shape[0] else 0.0
    m = np.asarray(matrix)
    return float(np.abs(m).sum(axis=1).max()) if m.size else 0.0


@dataclass(frozen=True)
class SpectrumReport:
    d: int
    n: int
    model: str
    size: int
    eigenvalues: np.ndarray | None
    zero_count: int
    lambda2: float | None
    lambda_max: float | None
    norm: float
    tol_zero: float
    tol_deg: float
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def lambda_min(self) -> float | None:
        """Smallest eigenvalue (zero when a kernel exists)."""
        if self.eigenvalues is None or not len(self.eigenvalues):
            return None
        return float(self.eigenvalues[0])

    def distinct(self) -> list[tuple[float, int]]:
        """Eigenvalues merged into clusters of width ``tol_deg``; (mean, multiplicity)."""
        if self.eigenvalues is None:
            raise InsufficientData("report carries no eigenvalues")
        out: list[tuple[float, int]] = []
        vals = self.eigenvalues
        start = 0
        for i in range(1, len(vals) + 1):
            if i == len(vals) or vals[i] - vals[i - 1] > self.tol_deg:
                block = vals[start:i]
                out.append((float(block.mean()), i - start))
                start = i
        return out


def spectrum(
    matrix,
    *,
    d: int = 0,
    n: int = 0,
    model: str = "",
    max_size: int = MAX_DENSE_SIZE,
) -> SpectrumReport:
    """Full spectrum of a symmetric matrix with zero snapping and degeneracy merging."""
    size = matrix.shape[0]
    if matrix.shape[0] != matrix.shape[1]:
        raise ContractViolation("matrix is not square")
    if size > max_size:
        raise ResourceGuardError(
            f"dense eigensolve of a {size}x{size} matrix",
            f"MAX_DENSE_SIZE={max_size}",
            "max_size=... (--ack-resources)",
        )
    dense = matrix.toarray() if sparse.issparse(matrix) else np.asarray(matrix)
    if np.issubdtype(dense.dtype, np.integer):
        if not np.array_equal(dense, dense.T):
            raise ContractViolation("matrix is not symmetric")
    elif not np.allclose(dense, dense.T, rtol=0, atol=1e-12 * max(1.0, infinity_norm(dense))):
        raise ContractViolation("matrix is not symmetric")
    norm = infinity_norm(dense)
    if size == 0:
        return SpectrumReport(d, n, model, 0, np.zeros(0), 0, None, None, norm, 0.0, 0.0)
    vals = scipy.linalg.eigvalsh(dense.astype(np.float64))
    scale = max(norm, 1.0)
    tol_zero = ZERO_RTOL * scale
    tol_deg = DEGENERACY_RTOL * scale
    vals = np.where(np.abs(vals) < tol_zero, 0.0, vals)
    vals.sort()
    vals.flags.writeable = False
    zero_count = int(np.count_nonzero(vals == 0.0))
    nonzero = vals[vals > tol_zero]
    lam2 = float(nonzero[0]) if len(nonzero) else None
    return SpectrumReport(
        d, n, model, size, vals, zero_count, lam2, float(vals[-1]), norm, tol_zero, tol_deg
    )


def complex_spectrum(c: Complex, d: int, max_size: int = MAX_DENSE_SIZE) -> SpectrumReport:
    return spectrum(hodge_laplacian(c, d), d=d, n=c.generation, model=c.model_name, max_size=max_size)


def cumulative_spectral_density(report: SpectrumReport) -> list[tuple[float, Fraction]]:
    """Staircase ``g_cum(lambda) = #{eigenvalues <= lambda} / N`` at each distinct eigenvalue."""
    out = []
    count = 0
    for value, mult in report.distinct():
        count += mult
        out.append((value, Fraction(count, report.size)))
    return out


def betti(c: Complex, d: int) -> int:
    return complex_spectrum(c, d).zero_count


# -- exact rank --


def exact_rank(matrix) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination."""
    dense = matrix.toarray() if sparse.issparse(matrix) else np.asarray(matrix)
    rows, cols = dense.shape
    if max(rows, cols) > MAX_EXACT_RANK_SIZE:
        raise ResourceGuardError(
            f"exact rank of a {rows}x{cols} matrix",
            f"MAX_EXACT_RANK_SIZE={MAX_EXACT_RANK_SIZE}",
            "dscx.hodge.MAX_EXACT_RANK_SIZE",
        )
    a = [[int(x) for x in row] for row in dense.tolist()]
    rank = 0
    prev = 1
    for col in range(cols):
        pivot = next((r for r in range(rank, rows) if a[r][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][col]
        for r in range(rank + 1, rows):
            f = a[r][col]
            row_r, row_p = a[r], a[rank]
            for j in range(col + 1, cols):
                row_r[j] = (p * row_r[j] - f * row_p[j]) // prev
            row_r[col] = 0
        prev = p
        rank += 1
        if rank == rows:
            break
    return rank


def betti_exact(c: Complex, d: int) -> int:
    """``N_d - rank B^(d) - rank B^(d+1)``."""
    nd = len(c.simplices(d))
    r_low = exact_rank(incidence(c, d).to_dense()) if d >= 1 else 0
    r_up = exact_rank(incidence(c, d + 1).to_dense()) if d + 1 <= c.max_dim else 0
    return nd - r_low - r_up


# -- Hodge matching --


@dataclass(frozen=True)
class MatchingReport:
    d: int
    matched: bool
    count_left: int
    count_right: int
    max_abs_diff: float
    tol: float


def hodge_matching_check(c: Complex, d: int, tol: float = 1e-8) -> MatchingReport:
    """Nonzero spectra of ``B B^T`` (acting on d-chains) and ``B^T B`` (on (d+1)-chains) agree."""
    if not 0 <= d < c.max_dim:
        raise DomainError(f"matching needs 0 <= d < {c.max_dim}")
    b = incidence(c, d + 1).to_dense().astype(np.float64)
    left = scipy.linalg.eigvalsh(b @ b.T)
    right = scipy.linalg.eigvalsh(b.T @ b)
    scale = max(1.0, float(np.abs(left).max()) if len(left) else 1.0)
    cut = ZERO_RTOL * scale
    left = np.sort(left[left > cut])
    right = np.sort(right[right > cut])
    if len(left) != len(right):
        return MatchingReport(d, False, len(left), len(right), math.inf, tol)
    diff = float(np.abs(left - right).max()) if len(left) else 0.0
    return MatchingReport(d, diff <= tol * scale, len(left), len(right), diff, tol)


# -- trajectories and spectral dimension --


def lambda2_trajectory(model, ns: Iterable[int], *, ack_resources: bool = False) -> list[dict]:
    """Smallest nonzero graph-Laplacian eigenvalue per generation.

    For constrained models with ``m >= 2`` the smallest eigenvalues of the
    higher Laplacians are included as ``lambda1_d``.
    """
    m = Model.parse(model) if isinstance(model, str) else model
    out = []
    for n in ns:
        c = build(n, m, ack_resources=ack_resources)
        row = {"n": n, "N0": c.next_vertex_id}
        rep0 = complex_spectrum(c, 0, max_size=_size_cap(ack_resources))
        row["lambda2"] = rep0.lambda2
        if m.m is not None and m.m >= 2:
            for d in range(1, c.max_dim + 1):
                rep = complex_spectrum(c, d, max_size=_size_cap(ack_resources))
                row[f"lambda1_{d}"] = rep.lambda_min
        out.append(row)
    return out


def _size_cap(ack: bool) -> int:
    return 10**9 if ack else MAX_DENSE_SIZE


@dataclass(frozen=True)
class SpectralDimension:
    staircase: list[dict]
    pairwise: list[tuple[int, int, float]]
    fit: float | None
    window: float

    @property
    def latest_pairwise(self) -> float | None:
        return self.pairwise[-1][2] if self.pairwise else None


def staircase_slope(report: SpectrumReport, window: float = 10.0) -> tuple[float, int]:
    """Twice the least-squares slope of ``ln g_cum`` against ``ln lambda`` on ``[l2, window*l2]``."""
    if report.lambda2 is None:
        raise InsufficientData("no nonzero eigenvalue")
    lo, hi = report.lambda2, window * report.lambda2
    pts = [
        (math.log(lam), math.log(float(g)))
        for lam, g in cumulative_spectral_density(report)
        if lo - report.tol_deg <= lam <= hi
    ]
    if len(pts) < 3:
        raise InsufficientData(f"only {len(pts)} staircase points in the fit window")
    x = np.array([p[0] for p in pts])
    y = np.array([p[1] for p in pts])
    slope = np.polyfit(x, y, 1)[0]
    return 2.0 * float(slope), len(pts)


def spectral_dimension_estimate(reports: Sequence[SpectrumReport], window: float = 10.0) -> SpectralDimension:
    """Spectral dimension from the low-lambda staircase and from ``lambda2`` scaling with size."""
    if len(reports) < 2:
        raise InsufficientData("need at least two generations")
    reports = sorted(reports, key=lambda r: r.n)
    stair = []
    for r in reports:
        if r.eigenvalues is None:
            continue
        try:
            ds, npts = staircase_slope(r, window)
        except InsufficientData:
            continue
        stair.append({"n": r.n, "d_s": ds, "points": npts})
    pairs = []
    for a, b in zip(reports, reports[1:]):
        ds = -2.0 * (math.log(b.size) - math.log(a.size)) / (math.log(b.lambda2) - math.log(a.lambda2))
        pairs.append((a.n, b.n, ds))
    x = np.log([r.size for r in reports])
    y = np.log([r.lambda2 for r in reports])
    fit = -2.0 / float(np.polyfit(x, y, 1)[0])
    return SpectralDimension(stair, pairs, fit, window)


def lambda2_point(n: int, size: int, lambda2: float, model: str = "", d: int = 0) -> SpectrumReport:
    """Report carrying only ``lambda2`` and the matrix size, for scaling estimates."""
    return SpectrumReport(d, n, model, size, None, 1, lambda2, None, 0.0, 0.0, 0.0)


# -- CSV exports --


def spectrum_csv(reports: Iterable[SpectrumReport]) -> str:
    buf = io.StringIO()
    buf.write("model,n,d,index,eigenvalue\n")
    for r in reports:
        for i, v in enumerate(r.eigenvalues):
            buf.write(f"{r.model},{r.n},{r.d},{i},{float(v):.17g}\n")
    return buf.getvalue()


def staircase_csv(reports: Iterable[SpectrumReport]) -> str:
    buf = io.StringIO()
    buf.write("model,n,d,lambda,g_cum_num,g_cum_den\n")
    for r in reports:
        for lam, g in cumulative_spectral_density(r):
            buf.write(f"{r.model},{r.n},{r.d},{lam:.17g},{g.numerator},{g.denominator}\n")
    return buf.getvalue()
