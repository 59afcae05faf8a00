"""The geometry of weight-``2m`` points of PG(n-1, 2) and its closure.

A point is stored as the bit mask of its support. Points of a
:class:`Geometry` are kept in colex order, which for masks is plain numeric
order, and most operations address them by position in that list.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import Iterable, Sequence, Union

from . import kernels
from .errors import ArgumentError, DimensionError, NoLinesError, SizeError
from .f2core import MAX_N, format_set, mask_of, support_of

PointLike = Union[int, Iterable[int]]

MAX_POINTS = 20_000

__all__ = [
    "CliqueInfo",
    "ExtendedGeometry",
    "Geometry",
    "Pencil",
    "build_extended",
    "build_geometry",
    "closure_by_sums",
    "common_neighbor_witness",
    "double_perp",
    "generalized_common_neighbor",
    "is_symmetric_design",
    "lambda_brute",
    "lambda_count",
    "lines_per_point",
    "maximal_cliques",
    "maximal_singular_subspaces",
    "one_or_all_violations",
    "pencil",
    "perp",
    "sum_partners",
    "tilde_components",
    "triangle_through",
]


def weight_masks(n: int, w: int) -> list[int]:
    """All ``n``-bit masks of popcount ``w`` in colex order."""
    out = [sum(1 << i for i in c) for c in itertools.combinations(range(n), w)]
    out.sort()
    return out


def lines_per_point(n: int, m: int) -> int:
    return comb(2 * m, m) * comb(n - 2 * m, m) // 2


@dataclass(frozen=True, eq=False)
class Geometry:
    n: int
    m: int
    points: tuple[int, ...]
    adjacency: tuple[int, ...]
    lines: tuple[tuple[int, int, int], ...]
    index: dict[int, int] = field(repr=False)

    def __len__(self) -> int:
        return len(self.points)

    def support(self, i: int) -> frozenset[int]:
        return support_of(self.points[i])

    def index_of(self, p: PointLike) -> int:
        """Position of a point given as a position or as a 1-based support."""
        if isinstance(p, int):
            if not 0 <= p < len(self.points):
                raise ArgumentError(f"point index {p} out of range")
            return p
        mask = mask_of(p, self.n)
        try:
            return self.index[mask]
        except KeyError:
            raise ArgumentError(f"{format_set(support_of(mask))} is not a point of weight {2 * self.m}") from None

    def is_adjacent(self, i: int, j: int) -> bool:
        return bool((self.adjacency[i] >> j) & 1)

    def third_point(self, i: int, j: int) -> int | None:
        """Index of the third point of the line through ``i`` and ``j``, if it is a point here."""
        if i == j:
            return None
        return self.index.get(self.points[i] ^ self.points[j])

    def neighbors(self, i: int) -> list[int]:
        return _bit_list(self.adjacency[i])

    @cached_property
    def line_set(self) -> frozenset[tuple[int, int, int]]:
        return frozenset(self.lines)

    @cached_property
    def lines_through(self) -> tuple[tuple[int, ...], ...]:
        """For each point, the positions in :attr:`lines` of the lines through it."""
        inc: list[list[int]] = [[] for _ in self.points]
        for pos, (a, b, c) in enumerate(self.lines):
            inc[a].append(pos)
            inc[b].append(pos)
            inc[c].append(pos)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def full_mask(self) -> int:
        return (1 << len(self.points)) - 1

    def stats(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "points": len(self.points),
            "lines": len(self.lines),
            "lines_per_point": lines_per_point(self.n, self.m),
            "degree": self.adjacency[0].bit_count() if self.points else 0,
            "diameter": kernels.diameter(list(self.adjacency)),
        }

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "points": [sorted(self.support(i)) for i in range(len(self.points))],
            "lines": [list(t) for t in self.lines],
        }

    def to_dot(self) -> str:
        labels = [",".join(map(str, sorted(self.support(i)))) for i in range(len(self.points))]
        return graph_to_dot(f"Gamma_{self.m}_n{self.n}", labels, self.adjacency)


def graph_to_dot(name: str, labels: Sequence[str], adjacency: Sequence[int]) -> str:
    out = [f"graph {name} {{"]
    for lab in labels:
        out.append(f'  "{lab}";')
    for i, row in enumerate(adjacency):
        for j in _bit_list(row >> (i + 1)):
            out.append(f'  "{labels[i]}" -- "{labels[i + 1 + j]}";')
    out.append("}")
    return "\n".join(out) + "\n"


def _bit_list(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def build_geometry(n: int, m: int) -> Geometry:
    if not isinstance(m, int) or m < 1:
        raise ArgumentError(f"m must be a positive integer, got {m!r}")
    if not isinstance(n, int) or n < 1 or n > MAX_N:
        raise DimensionError(f"n must be an integer in [1, {MAX_N}], got {n!r}")
    if 3 * m > n:
        raise NoLinesError(f"3m > n ({3 * m} > {n}): weight-{2 * m} points span no lines")
    if comb(n, 2 * m) > MAX_POINTS:
        raise SizeError(f"C({n},{2 * m}) = {comb(n, 2 * m)} points exceeds cap {MAX_POINTS}")
    pts = weight_masks(n, 2 * m)
    index = {p: i for i, p in enumerate(pts)}
    adj = kernels.intersection_graph(pts, m)
    lines = []
    for i, row in enumerate(adj):
        pi = pts[i]
        for j in _bit_list(row >> (i + 1)):
            j += i + 1
            k = index[pi ^ pts[j]]
            if k > j:
                lines.append((i, j, k))
    lines.sort()
    return Geometry(n, m, tuple(pts), tuple(adj), tuple(lines), index)


def common_neighbor_witness(G: Geometry, P: PointLike, Q: PointLike) -> int:
    """A point adjacent to both ``P`` and ``Q``, built by intersection-size case analysis.

    Ties are broken by always taking the smallest available coordinates.
    """
    i, j = G.index_of(P), G.index_of(Q)
    if i == j:
        raise ArgumentError("witness needs two distinct points")
    m, n = G.m, G.n
    I, J = G.points[i], G.points[j]
    k = (I & J).bit_count()
    if k == m:
        return G.index[I ^ J]

    def lowest(mask: int, count: int) -> int:
        out = 0
        for _ in range(count):
            low = mask & -mask
            out |= low
            mask ^= low
        return out

    if k < m:
        A = lowest(I & ~J, m) | lowest(J & ~I, m)
    else:
        t = k - m
        outside = ((1 << n) - 1) & ~(I | J)
        A = lowest(I & J, t) | lowest(outside, t) | lowest(I & ~J, m - t) | lowest(J & ~I, m - t)
    return G.index[A]


def is_symmetric_design(blocks: Sequence[int], v: int) -> bool:
    """Whether ``blocks`` (masks over ``v`` points) form a symmetric 2-design.

    Checks ``b == v``, constant block size, constant point replication and
    constant pairwise block intersection.
    """
    if len(blocks) != v or not blocks:
        return False
    if len({b.bit_count() for b in blocks}) != 1:
        return False
    if len({sum((b >> x) & 1 for b in blocks) for x in range(v)}) != 1:
        return False
    inter = {(a & b).bit_count() for a, b in itertools.combinations(blocks, 2)}
    return len(inter) <= 1


@dataclass(frozen=True)
class CliqueInfo:
    clique: tuple[int, ...]
    kind: str
    design_flag: bool


def _is_singular(G: Geometry, members: Sequence[int]) -> bool:
    masks = {G.points[i] for i in members}
    for a, b in itertools.combinations(masks, 2):
        if a ^ b not in masks:
            return False
    return True


def maximal_cliques(G: Geometry) -> list[CliqueInfo]:
    """Every maximal clique of the collinearity graph, classified."""
    out = []
    for bits in kernels.maximal_cliques(list(G.adjacency)):
        members = tuple(_bit_list(bits))
        singular = _is_singular(G, members)
        if singular:
            kind = "line" if len(members) == 3 else "singular-subspace"
        else:
            kind = "other"
        flag = len(members) == G.n and is_symmetric_design([G.points[i] for i in members], G.n)
        out.append(CliqueInfo(members, kind, flag))
    out.sort(key=lambda c: c.clique)
    return out


def one_or_all_violations(G: Geometry) -> list[tuple[int, int]]:
    """Pairs ``(point, line position)`` where the point off the line sees neither 1 nor 3 of its points."""
    bad = []
    for pos, line in enumerate(G.lines):
        on = (1 << line[0]) | (1 << line[1]) | (1 << line[2])
        for p in range(len(G.points)):
            if (on >> p) & 1:
                continue
            seen = (G.adjacency[p] & on).bit_count()
            if seen not in (1, 3):
                bad.append((p, pos))
    return bad


def maximal_singular_subspaces(G: Geometry) -> list[tuple[int, ...]]:
    """All maximal singular subspaces, found by growing XOR-closed cliques."""
    if len(G.points) > 1000:
        raise SizeError("singular-subspace search is capped at 1000 points")
    pts, index, adj = G.points, G.index, G.adjacency
    seen: set[frozenset[int]] = set()
    maximal: list[tuple[int, ...]] = []
    stack = [frozenset((i,)) for i in range(len(pts))]
    while stack:
        X = stack.pop()
        if X in seen:
            continue
        seen.add(X)
        common = G.full_mask
        for x in X:
            common &= adj[x]
        grew = False
        for p in _bit_list(common):
            pm = pts[p]
            images = [index.get(pm ^ pts[x]) for x in X]
            if None in images:
                continue
            grew = True
            Y = X | {p} | frozenset(images)  # type: ignore[arg-type]
            if Y not in seen:
                stack.append(Y)
        if not grew:
            maximal.append(tuple(sorted(X)))
    maximal.sort()
    return maximal


def perp(G: Geometry, X: Iterable[int]) -> int:
    """Bitset of the points collinear with every point of ``X``.

    Collinearity is reflexive here, as is usual for polar spaces, so a point is
    collinear with itself.
    """
    acc = G.full_mask
    for x in X:
        acc &= G.adjacency[x] | (1 << x)
    return acc


def double_perp(G: Geometry, X: Iterable[PointLike]) -> tuple[int, ...]:
    """``(X^c)^c``; the perp of the empty set is every point."""
    idx = [G.index_of(x) for x in X]
    once = perp(G, idx)
    return tuple(_bit_list(perp(G, _bit_list(once))))


# --- closure inside the even-weight hyperplane ---------------------------------


@dataclass(frozen=True, eq=False)
class ExtendedGeometry:
    """The base geometry together with the even-weight layers of its closure."""

    base: Geometry
    layers: dict[int, tuple[int, ...]]

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(sorted(p for layer in self.layers.values() for p in layer))

    @cached_property
    def mask_set(self) -> frozenset[int]:
        return frozenset(self.masks)

    def contains(self, mask: int) -> bool:
        return mask in self.mask_set

    def resolve(self, X: PointLike) -> int:
        """Mask of a closure point given as a mask or as a 1-based support."""
        if isinstance(X, int):
            mask = X
        else:
            mask = mask_of(X, self.base.n)
        if mask not in self.mask_set:
            raise ArgumentError(f"{format_set(support_of(mask))} is not in the closure")
        return mask

    def pairs_through(self, X: int) -> list[tuple[int, int]]:
        """Index pairs ``(p, q)``, ``p < q``, of base points with ``P_p + P_q = X``."""
        G = self.base
        out = []
        for p, pm in enumerate(G.points):
            q = G.index.get(pm ^ X)
            if q is not None and p < q:
                out.append((p, q))
        return out

    @cached_property
    def is_whole_hyperplane(self) -> bool:
        n = self.base.n
        return len(self.masks) == (1 << (n - 1)) - 1


def build_extended(G: Geometry) -> ExtendedGeometry:
    top = min(2 * G.m, G.n - 2 * G.m)
    layers = {i: tuple(weight_masks(G.n, 2 * i)) for i in range(1, top + 1)}
    return ExtendedGeometry(G, layers)


def closure_by_sums(G: Geometry) -> frozenset[int]:
    """All ``P + Q`` over distinct base points, by brute force."""
    pts = G.points
    return frozenset(a ^ b for a, b in itertools.combinations(pts, 2))


def _lambda_window(n: int, m: int) -> int:
    return min(2 * m, n - 2 * m)


def lambda_count(n: int, m: int, i: int) -> int:
    """Closed-form count of lines through a weight-``2i`` point meeting the base twice."""
    if not 1 <= i <= _lambda_window(n, m):
        raise ArgumentError(f"i={i} outside [1, {_lambda_window(n, m)}] for n={n}, m={m}")
    return comb(2 * i, i) * comb(n - 2 * i, 2 * m - i) // 2


def lambda_brute(ext: ExtendedGeometry, X: PointLike) -> int:
    mask = ext.resolve(X)
    G = ext.base
    hits = sum(1 for pm in G.points if (pm ^ mask) in G.index)
    return hits // 2


@dataclass(frozen=True)
class Pencil:
    center: int
    lines: tuple[tuple[int, int], ...]
    relation: tuple[frozenset[int], ...]

    def related(self, a: int, b: int) -> bool:
        return b in self.relation[a]


def pencil(ext: ExtendedGeometry, P: PointLike) -> Pencil:
    """Lines through a closure point off the base, with the Pasch-extension relation."""
    center = ext.resolve(P)
    G = ext.base
    if center in G.index:
        raise ArgumentError("pencil centre must lie outside the base geometry")
    lines = ext.pairs_through(center)
    pts, index = G.points, G.index
    rel: list[set[int]] = [set() for _ in lines]
    for a, b in itertools.combinations(range(len(lines)), 2):
        I, _ = lines[a]
        I2, J2 = lines[b]
        if (pts[I] ^ pts[I2]) in index or (pts[I] ^ pts[J2]) in index:
            rel[a].add(b)
            rel[b].add(a)
    return Pencil(center, tuple(lines), tuple(frozenset(r) for r in rel))


def tilde_components(pen: Pencil) -> list[list[int]]:
    """Connected components of the relation, as sorted lists of line positions."""
    parent = list(range(len(pen.lines)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, nbrs in enumerate(pen.relation):
        for b in nbrs:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for a in range(len(pen.lines)):
        groups.setdefault(find(a), []).append(a)
    return sorted(groups.values())


def sum_partners(ext: ExtendedGeometry) -> dict[int, int]:
    """For each closure point ``X``, the bitset of base points ``A`` with ``A + X`` in the base."""
    G = ext.base
    out = {}
    for X in ext.masks:
        acc = 0
        for a, pm in enumerate(G.points):
            if (pm ^ X) in G.index:
                acc |= 1 << a
        out[X] = acc
    return out


def generalized_common_neighbor(ext: ExtendedGeometry, I: PointLike, J: PointLike, off_line: bool = False) -> int | None:
    """Lowest-index base point ``A`` with ``A + I`` and ``A + J`` both in the base, if any.

    With ``off_line`` the point ``I + J`` itself is skipped, so ``A`` can serve as a triangle vertex.
    """
    X, Y = ext.resolve(I), ext.resolve(J)
    G = ext.base
    for a, pm in enumerate(G.points):
        if off_line and pm == X ^ Y:
            continue
        if (pm ^ X) in G.index and (pm ^ Y) in G.index:
            return a
    return None


def triangle_through(ext: ExtendedGeometry, A: int, I: int, J: int) -> tuple[tuple[int, int, int], ...]:
    """The lines ``<A, I>``, ``<A, J>``, ``<A + I, A + J>`` as mask triples."""
    a = ext.base.points[A]
    if a in (I, J, I ^ J):
        raise ArgumentError("the vertex lies on the line through I and J, so there is no triangle")
    return ((a, I, a ^ I), (a, J, a ^ J), (a ^ I, a ^ J, I ^ J))
