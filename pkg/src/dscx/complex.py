"""Deterministic simplicial complexes grown by explicit enumeration.

Every growth step attaches one fresh vertex ``v`` to each spawning simplex
``s`` and adds every set ``t | {v}`` with ``t`` a subset of ``s``.  In the
unconstrained model all simplices spawn; in the constrained model with
parameter ``m`` only simplices of dimension below ``m`` do.

Simplices are stored as plain ascending tuples of vertex ids, grouped per
dimension in insertion order.  A :class:`Complex` is immutable: growth returns
a new value and never touches its argument.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components, shortest_path

from .errors import (
    ConstraintViolation,
    DomainError,
    ResourceGuardError,
    SimplexNotFound,
)

# refuse enumerations whose predicted size exceeds this many simplices
MAX_SIMPLICES = 2_000_000
# all-pairs BFS for the diameter is refused above this many vertices
MAX_DIAMETER_VERTICES = 20_000

HEADER_PREFIX = "dscx-complex v1"


class Simplex(tuple):
    """Canonical simplex: strictly ascending tuple of non-negative vertex ids."""

    __slots__ = ()

    def __new__(cls, vertices: Iterable[int]):
        vs = sorted(int(v) for v in vertices)
        if not vs:
            raise DomainError("a simplex needs at least one vertex")
        if vs[0] < 0:
            raise DomainError("vertex ids must be non-negative")
        if any(a == b for a, b in zip(vs, vs[1:])):
            raise DomainError(f"repeated vertex in {vs}")
        return super().__new__(cls, vs)

    @property
    def dim(self) -> int:
        return len(self) - 1

    def facets(self) -> list["Simplex"]:
        """Facets in deletion order: the p-th entry omits the p-th vertex."""
        if len(self) == 1:
            return []
        return [Simplex(self[:p] + self[p + 1:]) for p in range(len(self))]

    def __repr__(self) -> str:
        return "Simplex(" + ",".join(map(str, self)) + ")"


@dataclass(frozen=True)
class Model:
    """Growth model; ``m=None`` is the unconstrained one."""

    m: int | None = None

    def __post_init__(self):
        if self.m is not None and self.m < 1:
            raise DomainError(f"constraint m must be >= 1, got {self.m}")

    @property
    def name(self) -> str:
        return "dsc" if self.m is None else f"dsc({self.m})"

    def spawns(self, d: int) -> bool:
        return self.m is None or d < self.m

    @classmethod
    def parse(cls, text: str) -> "Model":
        """Accepts ``dsc``, ``dsc(m)`` and the shorthand ``dscM``."""
        t = text.strip().lower().replace("_", "")
        if t == "dsc":
            return cls(None)
        if t.startswith("dsc(") and t.endswith(")"):
            body = t[4:-1]
        elif t.startswith("dsc"):
            body = t[3:]
        else:
            raise DomainError(f"unknown model {text!r}")
        if not body.isdigit():
            raise DomainError(f"unknown model {text!r}")
        return cls(int(body))


UNCONSTRAINED = Model(None)


# subsets of range(k) ordered by size, then lexicographically
_PATTERNS: dict[int, list[tuple[int, ...]]] = {}


def _patterns(size: int) -> list[tuple[int, ...]]:
    pats = _PATTERNS.get(size)
    if pats is None:
        pats = [
            t for r in range(size + 1) for t in itertools.combinations(range(size), r)
        ]
        _PATTERNS[size] = pats
    return pats


class Complex:
    """Generation-stamped simplicial complex with per-dimension registries."""

    __slots__ = ("generation", "model", "_levels", "_index", "_degrees", "_lock")

    def __init__(
        self,
        levels: Sequence[Sequence[tuple[int, ...]]],
        generation: int,
        model: Model | None,
    ):
        self._levels: tuple[tuple[tuple[int, ...], ...], ...] = tuple(
            tuple(level) for level in levels
        )
        self.generation = generation
        self.model = model
        self._index: dict[tuple[int, ...], tuple[int, int]] | None = None
        self._degrees: dict[int, np.ndarray] = {}
        self._lock = threading.Lock()

    # -- basic queries --

    @property
    def max_dim(self) -> int:
        return len(self._levels) - 1

    @property
    def next_vertex_id(self) -> int:
        return len(self._levels[0])

    @property
    def model_name(self) -> str:
        return (self.model or UNCONSTRAINED).name

    def simplices(self, d: int) -> tuple[tuple[int, ...], ...]:
        if not 0 <= d <= self.max_dim:
            raise DomainError(f"dimension {d} outside 0..{self.max_dim}")
        return self._levels[d]

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        for level in self._levels:
            yield from level

    def __len__(self) -> int:
        return sum(len(level) for level in self._levels)

    def fvector(self) -> list[int]:
        return [len(level) for level in self._levels]

    def index(self) -> dict[tuple[int, ...], tuple[int, int]]:
        """Reverse index simplex -> (dimension, ordinal), built on first use."""
        if self._index is None:
            with self._lock:
                if self._index is None:
                    idx = {}
                    for d, level in enumerate(self._levels):
                        for k, s in enumerate(level):
                            idx[s] = (d, k)
                    self._index = idx
        return self._index

    def locate(self, s: Iterable[int]) -> tuple[int, int]:
        key = tuple(Simplex(s))
        try:
            return self.index()[key]
        except KeyError:
            raise SimplexNotFound(key) from None

    def __contains__(self, s) -> bool:
        try:
            return tuple(Simplex(s)) in self.index()
        except DomainError:
            return False

    def upper_degrees(self, d: int) -> np.ndarray:
        """Upper degree of every d-simplex, aligned with the registry."""
        if not 0 <= d <= self.max_dim:
            raise DomainError(f"dimension {d} outside 0..{self.max_dim}")
        cached = self._degrees.get(d)
        if cached is not None:
            return cached
        deg = np.zeros(len(self._levels[d]), dtype=np.int64)
        if d < self.max_dim:
            idx = self.index()
            for s in self._levels[d + 1]:
                for p in range(len(s)):
                    deg[idx[s[:p] + s[p + 1:]][1]] += 1
        deg.flags.writeable = False
        with self._lock:
            self._degrees[d] = deg
        return deg

    def __eq__(self, other) -> bool:
        if not isinstance(other, Complex):
            return NotImplemented
        return (
            self.generation == other.generation
            and (self.model or UNCONSTRAINED) == (other.model or UNCONSTRAINED)
            and self._levels == other._levels
        )

    def __hash__(self) -> int:
        return hash((self.generation, self.model_name, self.fvector()))

    def __repr__(self) -> str:
        return f"Complex({self.model_name}, n={self.generation}, f={self.fvector()})"


def new_complex() -> Complex:
    """Generation 0: a single vertex, model not yet fixed."""
    return Complex([[(0,)]], 0, None)


def predicted_size(fvec: Sequence[int], model: Model) -> int:
    """Total simplex count after one growth step of a complex with ``fvec``."""
    total = sum(fvec)
    for d, count in enumerate(fvec):
        if model.spawns(d):
            total += count << (d + 1)
    return total


def _grow(c: Complex, model: Model, ack_resources: bool) -> Complex:
    if c.model is not None and c.model != model:
        raise ConstraintViolation(
            f"complex was grown as {c.model.name}, cannot continue as {model.name}"
        )
    size = predicted_size(c.fvector(), model)
    if size > MAX_SIMPLICES and not ack_resources:
        raise ResourceGuardError(
            f"growing {c.model_name} to generation {c.generation + 1} "
            f"would enumerate {size} simplices",
            f"MAX_SIMPLICES={MAX_SIMPLICES}",
            "ack_resources=True (--ack-resources)",
        )
    levels = [list(level) for level in c._levels]
    v = c.next_vertex_id
    # spawning order: descending dimension, then registry ordinal
    for d in range(c.max_dim, -1, -1):
        if not model.spawns(d):
            continue
        pats = _patterns(d + 1)
        while len(levels) < d + 2:
            levels.append([])
        for s in c._levels[d]:
            for pat in pats:
                levels[len(pat)].append(tuple(s[i] for i in pat) + (v,))
            v += 1
    return Complex(levels, c.generation + 1, model)


def grow(c: Complex, *, ack_resources: bool = False) -> Complex:
    """One unconstrained growth step."""
    return _grow(c, UNCONSTRAINED, ack_resources)


def grow_constrained(c: Complex, m: int, *, ack_resources: bool = False) -> Complex:
    """One growth step in which only simplices of dimension ``< m`` spawn."""
    if m < 1:
        raise DomainError(f"constraint m must be >= 1, got {m}")
    return _grow(c, Model(m), ack_resources)


def build(n: int, model: Model | str | None = None, *, ack_resources: bool = False) -> Complex:
    """Grow ``n`` generations from the single vertex."""
    if n < 0:
        raise DomainError("generation must be non-negative")
    if isinstance(model, str):
        model = Model.parse(model)
    model = model or UNCONSTRAINED
    c = new_complex()
    for _ in range(n):
        c = _grow(c, model, ack_resources)
    return c


def fvector_of(c: Complex) -> list[int]:
    """Simplex counts per dimension by direct enumeration."""
    return [sum(1 for _ in c.simplices(d)) for d in range(c.max_dim + 1)]


def skeleton(c: Complex, k: int) -> Complex:
    """Subcomplex of all simplices of dimension at most ``k``."""
    if not 0 <= k <= c.max_dim:
        raise DomainError(f"skeleton dimension {k} outside 0..{c.max_dim}")
    if k == c.max_dim:
        return c
    return Complex(c._levels[: k + 1], c.generation, c.model)


def edge_arrays(c: Complex) -> tuple[np.ndarray, np.ndarray]:
    if c.max_dim < 1:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    e = np.asarray(c.simplices(1), dtype=np.int64)
    return e[:, 0], e[:, 1]


def adjacency_matrix(c: Complex):
    """Sparse 0/1 adjacency of the 1-skeleton (CSR)."""
    n = c.next_vertex_id
    u, v = edge_arrays(c)
    data = np.ones(2 * len(u), dtype=np.int64)
    a = coo_matrix((data, (np.concatenate([u, v]), np.concatenate([v, u]))), shape=(n, n))
    return a.tocsr()


def diameter(c: Complex, chunk: int = 512) -> int:
    """Graph diameter of the 1-skeleton by breadth-first search from every vertex."""
    n = c.next_vertex_id
    if n == 1:
        return 0
    if n > MAX_DIAMETER_VERTICES:
        raise ResourceGuardError(
            f"all-pairs search over {n} vertices",
            f"MAX_DIAMETER_VERTICES={MAX_DIAMETER_VERTICES}",
            "dscx.complex.MAX_DIAMETER_VERTICES",
        )
    a = adjacency_matrix(c)
    ncomp, _ = connected_components(a, directed=False)
    assert ncomp == 1, "1-skeleton is disconnected"
    best = 0
    for start in range(0, n, chunk):
        rows = np.arange(start, min(n, start + chunk))
        dist = shortest_path(a, method="D", unweighted=True, indices=rows)
        best = max(best, int(dist.max()))
    return best


# -- text serialization --


def dumps(c: Complex) -> str:
    lines = [f"{HEADER_PREFIX} model={c.model_name} generation={c.generation}"]
    for d, level in enumerate(c._levels):
        prefix = f"d:{d} "
        lines.extend(prefix + " ".join(map(str, s)) for s in level)
    return "\n".join(lines) + "\n"


def loads(text: str) -> Complex:
    lines = text.splitlines()
    if not lines or not lines[0].startswith(HEADER_PREFIX):
        raise DomainError("missing dscx-complex header")
    fields = dict(tok.split("=", 1) for tok in lines[0][len(HEADER_PREFIX):].split())
    model = Model.parse(fields["model"])
    generation = int(fields["generation"])
    levels: list[list[tuple[int, ...]]] = []
    for line in lines[1:]:
        if not line.strip():
            continue
        tag, _, body = line.partition(" ")
        d = int(tag[2:])
        s = tuple(int(x) for x in body.split())
        if len(s) != d + 1:
            raise DomainError(f"bad simplex line {line!r}")
        while len(levels) <= d:
            levels.append([])
        levels[d].append(s)
    # a generation-0 complex has no fixed model yet
    return Complex(levels, generation, model if generation > 0 else None)
