"""Weight-``t`` projective points over a prime field GF(q), ``q >= 3``.

Only the simplex parameters ``n = (q^k - 1)/(q - 1)``, ``t = q^(k-1)`` are
built. Two points are collinear when the ``2 x n`` matrix of their
representatives has ``(q^(k-2) - 1)/(q - 1)`` zero columns and every non-zero
column is proportional to exactly ``q^(k-2)`` columns; this is the test for
extending the pair to a simplex generator matrix.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import ArgumentError, DimensionError, SizeError

MAX_POINTS = 100_000
MAX_DIAMETER_POINTS = 10_000
PRIMES = (3, 5, 7)

__all__ = [
    "QGeometry",
    "QVector",
    "build_qgeometry",
    "difference_witnesses",
    "line_points",
    "line_weights_ok",
    "non_collinear_line_profile",
    "point_count",
    "qary_collinear",
    "qary_common_neighbors",
    "qary_connectivity_and_diameter",
]


def _check_q(q: int) -> None:
    if q == 2:
        raise ArgumentError("q = 2 is the binary case; use the geometry module")
    if q not in PRIMES:
        raise ArgumentError(f"q must be a prime in {PRIMES}, got {q}")


def _inverses(q: int) -> np.ndarray:
    inv = np.zeros(q, dtype=np.int64)
    for a in range(1, q):
        inv[a] = pow(a, q - 2, q)
    return inv


@dataclass(frozen=True)
class QVector:
    """A projective point: entries scaled so the first non-zero entry is 1."""

    entries: tuple[int, ...]
    q: int

    def __post_init__(self) -> None:
        _check_q(self.q)
        if any(not 0 <= x < self.q for x in self.entries):
            raise ArgumentError(f"entries must lie in [0, {self.q})")
        lead = next((x for x in self.entries if x), 0)
        if lead != 1:
            raise ArgumentError("not normalised (first non-zero entry must be 1); use QVector.normalized")

    @classmethod
    def normalized(cls, entries: Iterable[int], q: int) -> QVector:
        _check_q(q)
        vals = [int(x) % q for x in entries]
        lead = next((x for x in vals if x), 0)
        if lead == 0:
            raise ArgumentError("the zero vector spans no point")
        inv = pow(lead, q - 2, q)
        return cls(tuple(x * inv % q for x in vals), q)

    @property
    def weight(self) -> int:
        return sum(1 for x in self.entries if x)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.entries)) + ")"


def _column_codes(x: np.ndarray, Y: np.ndarray, q: int, inv: np.ndarray) -> np.ndarray:
    """Projective class of each column of ``[x; y]`` for every row ``y`` of ``Y``.

    ``-1`` marks a zero column, ``0`` the class of ``(0, 1)`` and ``1 + c`` the class of ``(1, c)``.
    """
    X = np.broadcast_to(x, Y.shape)
    ratio = (Y * inv[X]) % q
    return np.where(X != 0, 1 + ratio, np.where(Y != 0, 0, -1))


def _collinear_rows(x: np.ndarray, Y: np.ndarray, q: int, k: int, inv: np.ndarray) -> np.ndarray:
    codes = _column_codes(x, Y, q, inv)
    need = q ** (k - 2)
    zeros = (need - 1) // (q - 1)
    ok = (codes == -1).sum(axis=1) == zeros
    for c in range(q + 1):
        ok &= (codes == c).sum(axis=1) == need
    return ok


@dataclass(frozen=True, eq=False)
class QGeometry:
    q: int
    k: int
    points: np.ndarray = field(repr=False)
    index: dict[tuple[int, ...], int] = field(repr=False)

    @property
    def n(self) -> int:
        return (self.q**self.k - 1) // (self.q - 1)

    @property
    def t(self) -> int:
        return self.q ** (self.k - 1)

    def __len__(self) -> int:
        return len(self.points)

    def point(self, i: int) -> QVector:
        return QVector(tuple(int(x) for x in self.points[i]), self.q)

    def index_of(self, v: QVector | Sequence[int] | int) -> int:
        if isinstance(v, (int, np.integer)):
            if not 0 <= v < len(self.points):
                raise ArgumentError(f"point index {v} out of range")
            return int(v)
        entries = v.entries if isinstance(v, QVector) else v
        if len(entries) != self.n:
            raise DimensionError(f"length {len(entries)} vs n={self.n}")
        key = QVector.normalized(entries, self.q).entries
        if key not in self.index:
            raise ArgumentError(f"{key} does not have weight {self.t}")
        return self.index[key]

    @cached_property
    def _inv(self) -> np.ndarray:
        return _inverses(self.q)

    def neighbors_mask(self, i: int) -> np.ndarray:
        ok = _collinear_rows(self.points[i], self.points, self.q, self.k, self._inv)
        ok[i] = False
        return ok

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Collinearity graph as integer bitsets."""
        rows = []
        for i in range(len(self.points)):
            bits = np.packbits(self.neighbors_mask(i), bitorder="little")
            rows.append(int.from_bytes(bits.tobytes(), "little"))
        return tuple(rows)

    def to_json(self) -> dict:
        connected, diam = qary_connectivity_and_diameter(self)
        return {
            "q": self.q,
            "k": self.k,
            "n": self.n,
            "t": self.t,
            "num_points": len(self.points),
            "connected": connected,
            "diameter": diam,
        }


def point_count(q: int, k: int) -> int:
    n = (q**k - 1) // (q - 1)
    t = q ** (k - 1)
    return comb(n, t) * (q - 1) ** (t - 1)


def build_qgeometry(q: int, k: int) -> QGeometry:
    """All normalised weight-``t`` points, in lexicographic order of their supports then entries."""
    _check_q(q)
    if k < 2:
        raise ArgumentError(f"need k >= 2, got {k}")
    count = point_count(q, k)
    if count > MAX_POINTS:
        raise SizeError(f"{count} points exceeds the cap of {MAX_POINTS}")
    n = (q**k - 1) // (q - 1)
    t = q ** (k - 1)
    rows = []
    for supp in itertools.combinations(range(n), t):
        for tail in itertools.product(range(1, q), repeat=t - 1):
            v = [0] * n
            v[supp[0]] = 1
            for pos, val in zip(supp[1:], tail):
                v[pos] = val
            rows.append(v)
    pts = np.array(rows, dtype=np.int64)
    index = {tuple(int(x) for x in r): i for i, r in enumerate(pts)}
    return QGeometry(q, k, pts, index)


def qary_collinear(G: QGeometry, x, y) -> bool:
    """Column criterion on the matrix with rows ``x`` and ``y``; equal points are never collinear."""
    a, b = G.index_of(x), G.index_of(y)
    if a == b:
        return False
    return bool(_collinear_rows(G.points[a], G.points[b : b + 1], G.q, G.k, G._inv)[0])


def qary_common_neighbors(G: QGeometry, P, P2) -> list[int]:
    """Indices of all points collinear with both (all neighbours of ``P`` when ``P = P2``)."""
    a, b = G.index_of(P), G.index_of(P2)
    both = G.neighbors_mask(a) & G.neighbors_mask(b)
    return [int(i) for i in np.flatnonzero(both)]


def qary_connectivity_and_diameter(G: QGeometry, diameter: bool = True) -> tuple[bool, int | None]:
    """Connectivity and exact diameter (``None`` when disconnected or not requested)."""
    if len(G) > MAX_POINTS:
        raise SizeError(f"{len(G)} points exceeds the connectivity cap of {MAX_POINTS}")
    if not diameter:
        return min(kernels.bfs_distances(G.adjacency, 0)) >= 0, None
    if len(G) > MAX_DIAMETER_POINTS:
        raise SizeError(f"{len(G)} points exceeds the diameter cap of {MAX_DIAMETER_POINTS}")
    d = kernels.diameter(G.adjacency)
    if d < 0:
        return False, None
    return True, d


def line_points(G: QGeometry, x, y) -> list[tuple[int, ...]]:
    """The ``q + 1`` normalised points of the projective line through ``x`` and ``y``."""
    a, b = G.index_of(x), G.index_of(y)
    if a == b:
        raise ArgumentError("a line needs two distinct points")
    px, py = G.points[a], G.points[b]
    out = [QVector.normalized(py, G.q).entries]
    for c in range(G.q):
        out.append(QVector.normalized((px + c * py) % G.q, G.q).entries)
    return out


def line_weights_ok(G: QGeometry, x, y) -> bool:
    """Whether every point on the line through ``x`` and ``y`` has weight ``t``."""
    return all(sum(1 for e in p if e) == G.t for p in line_points(G, x, y))


def non_collinear_line_profile(G: QGeometry, limit: int | None = None) -> dict[int, int]:
    """Histogram: number of off-geometry points on the line of a non-collinear pair -> pair count."""
    hist: dict[int, int] = {}
    seen = 0
    for a in range(len(G)):
        nbrs = G.neighbors_mask(a)
        for b in range(a + 1, len(G)):
            if nbrs[b]:
                continue
            off = sum(1 for p in line_points(G, a, b) if p not in G.index)
            hist[off] = hist.get(off, 0) + 1
            seen += 1
            if limit is not None and seen >= limit:
                return dict(sorted(hist.items()))
    return dict(sorted(hist.items()))


def difference_witnesses(q: int, n: int, t: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """For each coordinate ``i``, weight-``t`` vectors ``x, y`` with ``x - y = e_i``."""
    _check_q(q)
    if not 1 <= t <= n:
        raise ArgumentError(f"need 1 <= t <= n, got t={t}, n={n}")
    out = []
    for i in range(n):
        supp = [i] + [j for j in range(n) if j != i][: t - 1]
        x = [0] * n
        y = [0] * n
        for j in supp:
            x[j] = y[j] = 1
        x[i], y[i] = 2, 1
        out.append((tuple(x), tuple(y)))
    return out
