"""Generalised Johnson graphs ``J(n, t, i)`` with constructive connecting paths.

Vertices are ``t``-subsets of ``[n]`` stored as masks in colex order; two
vertices are adjacent when they share exactly ``i`` elements. ``J(n, t)`` is
``J(n, t, t-1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import Iterable, Mapping, Sequence

from . import kernels
from .errors import ArgumentError, NoPathError, SizeError
from .f2core import format_set, mask_of, support_of
from .geometry import graph_to_dot, weight_masks

MAX_VERTICES = 20000

__all__ = [
    "JohnsonGraph",
    "build_johnson",
    "complement_isomorphism",
    "connectivity_path",
    "lemma_step",
    "recover_injection",
    "star_top_cliques",
    "valid_windows",
]


def _lowest(mask: int, k: int) -> int:
    """The ``k`` lowest set bits of ``mask``."""
    out = 0
    for _ in range(k):
        low = mask & -mask
        out |= low
        mask ^= low
    return out


def _check_window(n: int, t: int, i: int, allow_k2: bool) -> None:
    if not 1 < t < n:
        raise ArgumentError(f"need 1 < t < n, got n={n}, t={t}")
    if not max(0, 2 * t - n) <= i < t:
        raise ArgumentError(f"need max(0, 2t-n) <= i < t, got n={n}, t={t}, i={i}")
    if i == 0 and n <= 2 * t and not (allow_k2 and n == 2 * t):
        raise ArgumentError(f"i = 0 needs n > 2t, got n={n}, t={t}")


@dataclass(frozen=True, eq=False)
class JohnsonGraph:
    n: int
    t: int
    i: int
    vertices: tuple[int, ...]
    adjacency: tuple[int, ...]
    index: dict[int, int] = field(repr=False)

    @property
    def degree(self) -> int:
        return comb(self.t, self.i) * comb(self.n - self.t, self.t - self.i)

    def vertex(self, X: int | Iterable[int]) -> int:
        """Index of a vertex given by its index or its 1-based support."""
        if isinstance(X, int):
            if not 0 <= X < len(self.vertices):
                raise ArgumentError(f"vertex index {X} out of range")
            return X
        mask = mask_of(X, self.n)
        if mask not in self.index:
            raise ArgumentError(f"{format_set(X)} is not a {self.t}-subset of [{self.n}]")
        return self.index[mask]

    def is_adjacent(self, a: int, b: int) -> bool:
        return bool((self.adjacency[a] >> b) & 1)

    @cached_property
    def is_connected(self) -> bool:
        return min(kernels.bfs_distances(self.adjacency, 0)) >= 0

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "t": self.t,
            "i": self.i,
            "num_vertices": len(self.vertices),
            "degree": self.degree,
            "connected": self.is_connected,
        }

    def to_dot(self) -> str:
        labels = ["".join(str(x) for x in sorted(support_of(v))) for v in self.vertices]
        return graph_to_dot(f"J_{self.n}_{self.t}_{self.i}", labels, self.adjacency)


def build_johnson(n: int, t: int, i: int) -> JohnsonGraph:
    """``J(n, t, i)``; the boundary ``n = 2t, i = 0`` (a perfect matching) is allowed."""
    _check_window(n, t, i, allow_k2=True)
    if comb(n, t) > MAX_VERTICES:
        raise SizeError(f"C({n},{t}) = {comb(n, t)} vertices exceeds the cap of {MAX_VERTICES}")
    verts = tuple(weight_masks(n, t))
    adj = tuple(kernels.intersection_graph(verts, i))
    return JohnsonGraph(n, t, i, verts, adj, {v: k for k, v in enumerate(verts)})


def lemma_step(Jg: JohnsonGraph, U: int, W: int) -> int | None:
    """Middle vertex ``Z = {a, b} + A + B`` joining two ``J(n, t)``-adjacent masks.

    ``a`` and ``b`` are the elements of ``U - W`` and ``W - U``, ``A`` the
    ``i - 1`` lowest elements of ``U & W`` and ``B`` the ``t - i - 1`` lowest
    elements outside ``U | W``. Returns ``None`` outside ``0 < i < t - 1``.
    """
    t, i = Jg.t, Jg.i
    if not 0 < i < t - 1:
        return None
    full = (1 << Jg.n) - 1
    A = _lowest(U & W, i - 1)
    B = _lowest(full & ~(U | W), t - i - 1)
    return (U & ~W) | (W & ~U) | A | B


def _bfs_path(Jg: JohnsonGraph, a: int, b: int) -> list[int]:
    dist = kernels.bfs_distances(Jg.adjacency, b)
    if dist[a] < 0:
        raise NoPathError("vertices lie in different components")
    path = [a]
    while path[-1] != b:
        row = Jg.adjacency[path[-1]]
        d = dist[path[-1]]
        while row:
            low = row & -row
            w = low.bit_length() - 1
            if dist[w] == d - 1:
                path.append(w)
                break
            row ^= low
    return path


def _drop_loops(path: list[int]) -> list[int]:
    out: list[int] = []
    seen: dict[int, int] = {}
    for v in path:
        if v in seen:
            del out[seen[v] + 1 :]
            seen = {u: k for k, u in enumerate(out)}
        else:
            seen[v] = len(out)
            out.append(v)
    return out


def connectivity_path(Jg: JohnsonGraph, X: int | Iterable[int], Y: int | Iterable[int]) -> list[frozenset[int]]:
    """A path from ``X`` to ``Y``, as 1-based supports.

    Walks a ``J(n, t)`` path that swaps the lowest differing elements, and
    bridges each step with :func:`lemma_step`; ``i = 0`` falls back to BFS.
    """
    a, b = Jg.vertex(X), Jg.vertex(Y)
    if Jg.i == 0 and Jg.n == 2 * Jg.t and a != b and not Jg.is_adjacent(a, b):
        raise NoPathError("J(2t, t, 0) is a disjoint union of K_2")
    if a == b:
        return [support_of(Jg.vertices[a])]
    if Jg.is_adjacent(a, b):
        return [support_of(Jg.vertices[a]), support_of(Jg.vertices[b])]
    if Jg.i == 0:
        return [support_of(Jg.vertices[v]) for v in _bfs_path(Jg, a, b)]
    U, target = Jg.vertices[a], Jg.vertices[b]
    masks = [U]
    while U != target:
        out_el = (U & ~target) & -(U & ~target)
        in_el = (target & ~U) & -(target & ~U)
        W = U ^ out_el ^ in_el
        if Jg.i < Jg.t - 1:
            masks.append(lemma_step(Jg, U, W))
        masks.append(W)
        U = W
    path = _drop_loops([Jg.index[mk] for mk in masks])
    return [support_of(Jg.vertices[v]) for v in path]


def star_top_cliques(n: int, t: int) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """Stars ``{I + x}`` over ``(t-1)``-sets ``I`` and tops ``{J - x}`` over ``(t+1)``-sets ``J`` of ``J(n, t)``.

    Each clique is a sorted tuple of vertex masks.
    """
    if not 1 < t < n - 1:
        raise ArgumentError(f"need 1 < t < n-1, got n={n}, t={t}")
    full = (1 << n) - 1
    stars, tops = [], []
    for I in weight_masks(n, t - 1):
        rest = full & ~I
        stars.append(tuple(sorted(I | (1 << x) for x in range(n) if (rest >> x) & 1)))
    for J in weight_masks(n, t + 1):
        tops.append(tuple(sorted(J & ~(1 << x) for x in range(n) if (J >> x) & 1)))
    return stars, tops


def complement_isomorphism(n: int, t: int) -> dict[int, int]:
    """The map ``X -> [n] - X`` from ``J(n, t)`` to ``J(n, n - t)`` on masks."""
    full = (1 << n) - 1
    return {X: full ^ X for X in weight_masks(n, t)}


def recover_injection(m: int, n: int, embedding: Mapping[int, int]) -> tuple[int, ...] | None:
    """The injection ``[m] -> [n]`` (1-based images) inducing an embedding of ``J(m, 2)`` in ``J(n, 2)``.

    ``embedding`` maps 2-subset masks of ``[m]`` to 2-subset masks of ``[n]``.
    Each element's image is the common element of the images of its star.
    Returns ``None`` if the embedding is not induced by an injection.
    """
    if m < 3:
        raise ArgumentError(f"need m >= 3, got {m}")
    images = []
    for x in range(m):
        acc = (1 << n) - 1
        for y in range(m):
            if y != x:
                pair = (1 << x) | (1 << y)
                if pair not in embedding:
                    raise ArgumentError(f"embedding misses {format_set(support_of(pair))}")
                acc &= embedding[pair]
        if acc.bit_count() != 1:
            return None
        images.append(acc.bit_length())
    if len(set(images)) != m:
        return None
    for pair, img in embedding.items():
        x, y = sorted(support_of(pair))
        if img != (1 << (images[x - 1] - 1)) | (1 << (images[y - 1] - 1)):
            return None
    return tuple(images)


def valid_windows(max_n: int) -> Sequence[tuple[int, int, int]]:
    """Every ``(n, t, i)`` in the connectivity window with ``n <= max_n``."""
    out = []
    for n in range(3, max_n + 1):
        for t in range(2, n):
            for i in range(max(0, 2 * t - n), t):
                if i == 0 and n <= 2 * t:
                    continue
                out.append((n, t, i))
    return out
