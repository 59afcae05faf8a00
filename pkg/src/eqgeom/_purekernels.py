"""Pure-Python hot kernels.

Every function here has a compiled twin in ``_speedups.pyx`` with the same
signature and the same (deterministic) output. Graphs are passed as lists of
Python-int bitsets: bit ``u`` of ``adj[v]`` is set iff ``u`` and ``v`` are
adjacent.
"""

from __future__ import annotations

from typing import Sequence

BACKEND = "python"


def _popcount(x: int) -> int:
    return x.bit_count()


def intersection_graph(masks: Sequence[int], size: int) -> list[int]:
    """Adjacency bitsets of the graph joining ``a != b`` with ``|a & b| == size``.

    The compiled twin handles masks of at most 64 bits and defers wider ones here.
    """
    nv = len(masks)
    adj = [0] * nv
    for i in range(nv):
        a = masks[i]
        row = adj[i]
        for j in range(i + 1, nv):
            if _popcount(a & masks[j]) == size:
                row |= 1 << j
                adj[j] |= 1 << i
        adj[i] = row
    return adj


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def maximal_cliques(adj: Sequence[int]) -> list[int]:
    """All maximal cliques (as bitsets), Bron-Kerbosch with Tomita pivoting."""
    out: list[int] = []
    nv = len(adj)
    if nv == 0:
        return out

    def expand(r: int, p: int, x: int) -> None:
        if not p:
            if not x:
                out.append(r)
            return
        best = -1
        pivot_nbrs = 0
        for u in _bits(p | x):
            c = _popcount(p & adj[u])
            if c > best:
                best = c
                pivot_nbrs = adj[u]
        for v in _bits(p & ~pivot_nbrs):
            bit = 1 << v
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    expand(0, (1 << nv) - 1, 0)
    return out


def bfs_distances(adj: Sequence[int], source: int) -> list[int]:
    """Graph distances from ``source``; -1 marks unreachable vertices."""
    nv = len(adj)
    dist = [-1] * nv
    dist[source] = 0
    seen = 1 << source
    frontier = seen
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        nxt &= ~seen
        for v in _bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def diameter(adj: Sequence[int]) -> int:
    """Exact diameter, or -1 when the graph is disconnected."""
    nv = len(adj)
    if nv == 0:
        return 0
    full = (1 << nv) - 1
    best = 0
    for s in range(nv):
        seen = 1 << s
        frontier = seen
        d = 0
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            nxt &= ~seen
            if not nxt:
                break
            d += 1
            seen |= nxt
            frontier = nxt
        if seen != full:
            return -1
        if d > best:
            best = d
    return best


def refine_colors(
    colors: Sequence[int],
    indptr: Sequence[int],
    first: Sequence[int],
    second: Sequence[int] | None,
) -> list[int]:
    """Iterated colour refinement to a stable colouring.

    Vertex ``v`` sees the entries ``indptr[v]:indptr[v+1]`` of ``first`` (and
    of ``second`` in pair mode, where each entry is an unordered pair such as
    the two other points of a line through ``v``). New colours are ranks of
    the sorted distinct signatures ``(old colour, sorted neighbour codes)``,
    so the result depends only on the isomorphism type of the input.
    """
    cols = list(colors)
    nv = len(cols)
    k = len(set(cols))
    while True:
        keys = []
        mult = max(cols, default=0) + 1
        if second is None:
            for v in range(nv):
                codes = sorted(cols[first[e]] for e in range(indptr[v], indptr[v + 1]))
                keys.append((cols[v], tuple(codes)))
        else:
            for v in range(nv):
                codes = []
                for e in range(indptr[v], indptr[v + 1]):
                    a = cols[first[e]]
                    b = cols[second[e]]
                    if a > b:
                        a, b = b, a
                    codes.append(a * mult + b)
                codes.sort()
                keys.append((cols[v], tuple(codes)))
        rank = {key: r for r, key in enumerate(sorted(set(keys)))}
        cols = [rank[key] for key in keys]
        if len(rank) == k:
            return cols
        k = len(rank)


def _perm_mask(sigma: Sequence[int], mask: int) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << sigma[low.bit_length() - 1]
        mask ^= low
    return out


class Classifier:
    """Find which candidate ``E`` makes ``f o E^{-1}`` a coordinate permutation.

    ``members[a]`` lists the points containing coordinate ``a``; each entry of
    ``einvs`` is the point table of ``E^{-1}``. ``classify`` returns the first
    matching candidate index and the 0-based coordinate permutation, or
    ``(-1, None)``.
    """

    def __init__(self, points: Sequence[int], members: Sequence[Sequence[int]], einvs: Sequence[Sequence[int]]):
        self.points = list(points)
        self.members = [list(m) for m in members]
        self.einvs = [list(e) for e in einvs]

    def _try(self, f: Sequence[int], einv: Sequence[int]):
        pts = self.points
        sigma = []
        used = 0
        for mem in self.members:
            acc = -1
            for p in mem:
                acc &= pts[f[einv[p]]]
                if not acc:
                    return None
            if acc & (acc - 1) or acc & used:
                return None
            used |= acc
            sigma.append(acc.bit_length() - 1)
        for i, p in enumerate(pts):
            if _perm_mask(sigma, p) != pts[f[einv[i]]]:
                return None
        return tuple(sigma)

    def classify(self, f: Sequence[int]):
        for k, einv in enumerate(self.einvs):
            sigma = self._try(f, einv)
            if sigma is not None:
                return k, sigma
        return -1, None
