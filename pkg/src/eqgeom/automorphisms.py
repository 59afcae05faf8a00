"""Automorphisms of the geometry and of its collinearity graph.

Point maps are tuples ``f`` with ``f[i]`` the image of point ``i``; composition
``compose(f, g)`` means ``f`` after ``g``. Groups are computed exactly by
individualisation-refinement search along a stabiliser chain whose base
points are the first non-fixed points in colex order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import prod
from typing import Callable, Iterator, Sequence

from . import kernels
from .errors import ArgumentError, ClassificationError, SizeError, WellDefinednessError
from .f2core import LinearMap, make_special_map
from .geometry import ExtendedGeometry, Geometry

MAX_GROUP_POINTS = 512

PointMap = tuple[int, ...]

__all__ = [
    "AutGroup",
    "Automorphism",
    "Decomposition",
    "ExceptionalTag",
    "automorphism_group",
    "classify_automorphism",
    "closure_linear_map",
    "closure_preserves_lines",
    "complement_map",
    "decompose_exceptional_word",
    "compose",
    "exceptional_candidates",
    "extend_to_closure",
    "gamma_automorphism_group",
    "graph_automorphism_group",
    "induced_point_map",
    "inverse",
    "is_geometry_automorphism",
    "is_graph_automorphism",
    "permutation_point_map",
]


def compose(f: Sequence[int], g: Sequence[int]) -> PointMap:
    """``f`` after ``g``."""
    return tuple(f[x] for x in g)


def inverse(f: Sequence[int]) -> PointMap:
    out = [0] * len(f)
    for i, y in enumerate(f):
        out[y] = i
    return tuple(out)


@dataclass(frozen=True)
class ExceptionalTag:
    kind: str
    indices: tuple[int, ...]

    def __str__(self) -> str:
        name = {"l": "l", "s": "s", "s_prime": "s'"}[self.kind]
        return f"{name}({','.join(map(str, self.indices))})"

    def linear_map(self, n: int) -> LinearMap:
        return make_special_map(self.kind, self.indices, n)

    def to_json(self) -> dict:
        return {"kind": self.kind, "indices": list(self.indices)}


@dataclass(frozen=True)
class Decomposition:
    """``f = induced(perm) o induced(exceptional)``; ``perm`` holds 1-based coordinate images."""

    perm: tuple[int, ...]
    exceptional: ExceptionalTag | None

    def to_json(self) -> dict:
        return {
            "perm": list(self.perm),
            "exceptional": None if self.exceptional is None else self.exceptional.to_json(),
        }

    def __str__(self) -> str:
        perm = "perm " + ",".join(map(str, self.perm))
        return perm if self.exceptional is None else f"{perm} after {self.exceptional}"


@dataclass(frozen=True)
class Automorphism:
    images: PointMap
    decomposition: Decomposition | None = None

    def __len__(self) -> int:
        return len(self.images)

    def __getitem__(self, i: int) -> int:
        return self.images[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)


def _images(f: Automorphism | Sequence[int]) -> PointMap:
    return f.images if isinstance(f, Automorphism) else tuple(f)


# --- maps induced by linear automorphisms of V ----------------------------------


def induced_point_map(M: LinearMap, G: Geometry) -> Automorphism | None:
    """The point map of ``M``, or ``None`` if ``M`` does not preserve the weight-``2m`` points."""
    if M.n != G.n:
        raise ArgumentError(f"map dimension {M.n} vs geometry n={G.n}")
    if not M.is_invertible():
        raise ArgumentError("map is not invertible")
    out = []
    for p in G.points:
        q = G.index.get(M.apply_mask(p))
        if q is None:
            return None
        out.append(q)
    dec = None
    if M.is_permutation():
        perm = tuple(c.bit_length() for c in M.columns)
        dec = Decomposition(perm, None)
    return Automorphism(tuple(out), dec)


def _perm_mask(sigma: Sequence[int], mask: int) -> int:
    out = 0
    j = 0
    while mask:
        if mask & 1:
            out |= 1 << sigma[j]
        mask >>= 1
        j += 1
    return out


def permutation_point_map(G: Geometry, perm: Sequence[int]) -> PointMap:
    """Point map of a coordinate permutation given by 1-based images."""
    if sorted(perm) != list(range(1, G.n + 1)):
        raise ArgumentError(f"not a permutation of [1, {G.n}]: {list(perm)}")
    sigma = [p - 1 for p in perm]
    return tuple(G.index[_perm_mask(sigma, p)] for p in G.points)


def complement_map(G: Geometry) -> PointMap:
    """``P_I -> P_{[n]-I}``; only a map of the point set when ``n = 4m``."""
    if G.n != 4 * G.m:
        raise ArgumentError("the complement map sends weight-2m points to weight-2m points only if n = 4m")
    full = (1 << G.n) - 1
    return tuple(G.index[full ^ p] for p in G.points)


def _bijective(f: Sequence[int], size: int) -> bool:
    return len(f) == size and sorted(f) == list(range(size))


def is_geometry_automorphism(G: Geometry, f: Automorphism | Sequence[int]) -> bool:
    """Whether ``f`` maps lines onto lines in both directions."""
    f = _images(f)
    if not _bijective(f, len(G.points)):
        return False
    lines = G.line_set
    finv = inverse(f)
    for g in (f, finv):
        for a, b, c in G.lines:
            if tuple(sorted((g[a], g[b], g[c]))) not in lines:
                return False
    return True


def is_graph_automorphism(adjacency: Sequence[int], f: Sequence[int]) -> bool:
    f = _images(f)
    nv = len(adjacency)
    if not _bijective(f, nv):
        return False
    for v in range(nv):
        row = adjacency[v]
        image = 0
        while row:
            low = row & -row
            image |= 1 << f[low.bit_length() - 1]
            row ^= low
        if image != adjacency[f[v]]:
            return False
    return True


# --- search engine -------------------------------------------------------------


@dataclass
class _Structure:
    size: int
    indptr: list[int]
    first: list[int]
    second: list[int] | None
    verify: Callable[[PointMap], bool]

    def refine(self, colors: Sequence[int]) -> list[int]:
        return kernels.refine_colors(colors, self.indptr, self.first, self.second)


def _graph_structure(adjacency: Sequence[int]) -> _Structure:
    indptr, first = [0], []
    for row in adjacency:
        while row:
            low = row & -row
            first.append(low.bit_length() - 1)
            row ^= low
        indptr.append(len(first))
    adj = list(adjacency)
    return _Structure(len(adj), indptr, first, None, lambda f: is_graph_automorphism(adj, f))


def _line_structure(G: Geometry) -> _Structure:
    indptr, first, second = [0], [], []
    for p in range(len(G.points)):
        for pos in G.lines_through[p]:
            others = [x for x in G.lines[pos] if x != p]
            first.append(others[0])
            second.append(others[1])
        indptr.append(len(first))
    return _Structure(len(G.points), indptr, first, second, lambda f: is_geometry_automorphism(G, f))


def _individualize(colors: Sequence[int], v: int) -> list[int]:
    out = [2 * c for c in colors]
    out[v] += 1
    return out


def _target_cell(colors: Sequence[int]) -> list[int] | None:
    """Smallest non-singleton cell (ties: lowest colour), or ``None`` if discrete."""
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    best = None
    for c in sorted(cells):
        cell = cells[c]
        if len(cell) > 1 and (best is None or len(cell) < len(best)):
            best = cell
    return best


def _search(S: _Structure, cs: list[int], cd: list[int]) -> PointMap | None:
    """An automorphism carrying colouring ``cs`` to ``cd``, if any."""
    if sorted(cs) != sorted(cd):
        return None
    cell = _target_cell(cs)
    if cell is None:
        where = {c: v for v, c in enumerate(cd)}
        f = tuple(where[c] for c in cs)
        return f if S.verify(f) else None
    color = cs[cell[0]]
    v = cell[0]
    cs2 = S.refine(_individualize(cs, v))
    for w in (u for u, c in enumerate(cd) if c == color):
        found = _search(S, cs2, S.refine(_individualize(cd, w)))
        if found is not None:
            return found
    return None


def _orbit_transversal(b: int, gens: Sequence[PointMap], size: int) -> dict[int, PointMap]:
    ident = tuple(range(size))
    trans = {b: ident}
    queue = [b]
    while queue:
        x = queue.pop()
        tx = trans[x]
        for g in gens:
            y = g[x]
            if y not in trans:
                trans[y] = compose(g, tx)
                queue.append(y)
    return trans


@dataclass
class AutGroup:
    """A permutation group on point indices given by a stabiliser chain."""

    size: int
    base: list[int]
    transversals: list[dict[int, PointMap]]
    generators: list[PointMap] = field(default_factory=list)

    @property
    def order(self) -> int:
        return prod(len(t) for t in self.transversals)

    @property
    def orbit_sizes(self) -> list[int]:
        return [len(t) for t in self.transversals]

    def elements(self) -> Iterator[PointMap]:
        """Every element exactly once, as ``u_1 o u_2 o ... o u_k``."""
        levels = [list(t.values()) for t in self.transversals]
        ident = tuple(range(self.size))

        def walk(depth: int, prefix: PointMap) -> Iterator[PointMap]:
            if depth == len(levels):
                yield prefix
                return
            for u in levels[depth]:
                yield from walk(depth + 1, compose(prefix, u))

        return walk(0, ident)

    def contains(self, f: Sequence[int]) -> bool:
        """Membership by sifting through the chain."""
        g = tuple(f)
        for b, trans in zip(self.base, self.transversals):
            u = trans.get(g[b])
            if u is None:
                return False
            g = compose(inverse(u), g)
        return g == tuple(range(self.size))

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "num_generators": len(self.generators),
            "generators": [{"point_images": list(g)} for g in self.generators],
        }


def _group(S: _Structure) -> AutGroup:
    colors = S.refine([0] * S.size)
    base: list[int] = []
    transversals: list[dict[int, PointMap]] = []
    gens: list[PointMap] = []
    while True:
        cell = _target_cell(colors)
        if cell is None:
            break
        b = min(cell)
        cb = S.refine(_individualize(colors, b))
        level_gens: list[PointMap] = []
        trans = {b: tuple(range(S.size))}
        for x in cell:
            if x in trans:
                continue
            g = _search(S, cb, S.refine(_individualize(colors, x)))
            if g is None:
                continue
            level_gens.append(g)
            trans = _orbit_transversal(b, level_gens, S.size)
        base.append(b)
        transversals.append(trans)
        gens.extend(level_gens)
        colors = cb
    return AutGroup(S.size, base, transversals, gens)


def automorphism_group(G: Geometry) -> AutGroup:
    """The full automorphism group of the point-line geometry."""
    if len(G.points) > MAX_GROUP_POINTS:
        raise SizeError(f"{len(G.points)} points exceeds the cap of {MAX_GROUP_POINTS}")
    return _group(_line_structure(G))


def graph_automorphism_group(adjacency: Sequence[int]) -> AutGroup:
    if len(adjacency) > MAX_GROUP_POINTS:
        raise SizeError(f"{len(adjacency)} vertices exceeds the cap of {MAX_GROUP_POINTS}")
    return _group(_graph_structure(adjacency))


def gamma_automorphism_group(G: Geometry) -> AutGroup:
    """Automorphisms of the collinearity graph (which need not preserve lines)."""
    return graph_automorphism_group(G.adjacency)


# --- classification -------------------------------------------------------------


_CANDIDATES: dict[tuple[int, int], list[tuple[ExceptionalTag | None, PointMap]]] = {}
_CONTAINING: dict[tuple[int, int], list[list[int]]] = {}


def exceptional_candidates(G: Geometry) -> list[tuple[ExceptionalTag | None, PointMap]]:
    """``[none, l_1..l_n, s_ij.., s'_ij..]`` restricted to maps preserving the point set, with inverses."""
    key = (G.n, G.m)
    if key not in _CANDIDATES:
        n = G.n
        tags: list[ExceptionalTag] = [ExceptionalTag("l", (i,)) for i in range(1, n + 1)]
        pairs = list(itertools.combinations(range(1, n + 1), 2))
        tags += [ExceptionalTag("s", p) for p in pairs]
        tags += [ExceptionalTag("s_prime", p) for p in pairs]
        out: list[tuple[ExceptionalTag | None, PointMap]] = [(None, tuple(range(len(G.points))))]
        for tag in tags:
            f = induced_point_map(tag.linear_map(n), G)
            if f is not None:
                out.append((tag, inverse(f.images)))
        _CANDIDATES[key] = out
    return _CANDIDATES[key]


def _containing(G: Geometry) -> list[list[int]]:
    key = (G.n, G.m)
    if key not in _CONTAINING:
        _CONTAINING[key] = [
            [i for i, p in enumerate(G.points) if (p >> a) & 1] for a in range(G.n)
        ]
    return _CONTAINING[key]


_CLASSIFIERS: dict[tuple[int, int], object] = {}


def _classifier(G: Geometry):
    key = (G.n, G.m)
    if key not in _CLASSIFIERS:
        einvs = [einv for _, einv in exceptional_candidates(G)]
        _CLASSIFIERS[key] = kernels.Classifier(G.points, _containing(G), einvs)
    return _CLASSIFIERS[key]


def classify_automorphism(G: Geometry, f: Automorphism | Sequence[int]) -> Decomposition:
    """Write ``f`` as a permutation-induced map after at most one exceptional map.

    Exceptional parts are tried in the fixed order of :func:`exceptional_candidates`
    and the first match is returned.
    """
    images = _images(f)
    if not _bijective(images, len(G.points)):
        raise ArgumentError("not a bijection of the points")
    k, sigma = _classifier(G).classify(images)
    if k < 0:
        raise ClassificationError(f"no decomposition found for an automorphism of ({G.n},{G.m})")
    tag = exceptional_candidates(G)[k][0]
    return Decomposition(tuple(s + 1 for s in sigma), tag)


_WORD_CLASSIFIERS: dict[tuple[int, int], tuple[list[tuple[ExceptionalTag, ExceptionalTag]], object]] = {}


def decompose_exceptional_word(G: Geometry, f: Automorphism | Sequence[int]) -> tuple[tuple[int, ...], tuple[ExceptionalTag, ...]]:
    """Like :func:`classify_automorphism` but allowing a product ``E_1 o E_2`` of two exceptional maps.

    Returns ``(perm, tags)`` with ``f = induced(perm) o induced(E_1) o ... ``.
    """
    images = _images(f)
    try:
        dec = classify_automorphism(G, images)
        return dec.perm, () if dec.exceptional is None else (dec.exceptional,)
    except ClassificationError:
        pass
    key = (G.n, G.m)
    if key not in _WORD_CLASSIFIERS:
        cands = exceptional_candidates(G)[1:]
        tags, einvs = [], []
        for (t1, i1), (t2, i2) in itertools.combinations(cands, 2):
            tags.append((t1, t2))
            einvs.append(compose(i2, i1))
        _WORD_CLASSIFIERS[key] = (tags, kernels.Classifier(G.points, _containing(G), einvs))
    tags, clf = _WORD_CLASSIFIERS[key]
    k, sigma = clf.classify(images)
    if k < 0:
        raise ClassificationError(f"no decomposition with at most two exceptional factors on ({G.n},{G.m})")
    return tuple(x + 1 for x in sigma), tags[k]


# --- extension to the closure -------------------------------------------------


def extend_to_closure(ext: ExtendedGeometry, f: Automorphism | Sequence[int]) -> dict[int, int]:
    """Extend a point map to the closure via ``f(P + Q) = f(P) + f(Q)``.

    For ``n = 3m`` only the weight-2 layer is added. Raises
    :class:`WellDefinednessError` if two pairs summing to the same point
    disagree.
    """
    G = ext.base
    images = _images(f)
    if not _bijective(images, len(G.points)):
        raise ArgumentError("not a bijection of the base points")
    pts = G.points
    out = {pts[i]: pts[images[i]] for i in range(len(pts))}
    if G.n == 3 * G.m:
        domain = [x for x in ext.layers.get(1, ()) if x not in G.index]
    else:
        domain = [x for x in ext.masks if x not in G.index]
    for X in domain:
        vals = {pts[images[p]] ^ pts[images[q]] for p, q in ext.pairs_through(X)}
        if len(vals) != 1:
            raise WellDefinednessError(f"extension ambiguous at a weight-{X.bit_count()} point")
        out[X] = vals.pop()
    if len(set(out.values())) != len(out) or set(out.values()) != set(out):
        raise WellDefinednessError("extension is not a bijection of its domain")
    return out


def closure_preserves_lines(ext: ExtendedGeometry, fbar: dict[int, int]) -> bool:
    """Lines meeting the base twice go to such lines, in both directions."""
    pts = ext.base.points
    inv = {v: k for k, v in fbar.items()}
    for g in (fbar, inv):
        for a, b in itertools.combinations(pts, 2):
            c = a ^ b
            if c in g and g[c] != g[a] ^ g[b]:
                return False
    return True


def closure_linear_map(ext: ExtendedGeometry, fbar: dict[int, int]) -> LinearMap | None:
    """A linear map of V (fixing ``e_1``) agreeing with ``fbar`` on its domain, if one exists."""
    n = ext.base.n
    e1 = 1
    cols = [e1]
    for j in range(1, n):
        b = e1 | (1 << j)
        if b not in fbar:
            return None
        cols.append(fbar[b] ^ e1)
    M = LinearMap(tuple(cols))
    if not M.is_invertible():
        return None
    for x, y in fbar.items():
        if M.apply_mask(x) != y:
            return None
    return M
