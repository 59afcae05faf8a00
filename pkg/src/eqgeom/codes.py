"""Binary linear codes given by generator matrices, and equidistant structure.

Rows are bit-packed like :class:`~eqgeom.f2core.F2Vector` (coordinate 1 in
bit 0). A code is stored by the reduced row-echelon form of its generator,
so two :class:`Code` objects are equal iff they span the same subspace.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import ArgumentError, DimensionError, InconsistencyError, SizeError, StructureError
from .f2core import MAX_N, gf2_rank
from .geometry import Geometry

MAX_K = 20

__all__ = [
    "Code",
    "EquidistantProfile",
    "bonis_decompose",
    "code_to_subspace",
    "construct_replicated_simplex",
    "is_equidistant",
    "max_equidistant_dim",
    "simplex_code",
    "subspace_code_bridge",
]


def _rref(rows: Sequence[int]) -> tuple[int, ...]:
    """Reduced row-echelon form with pivots on the lowest set bit, rows sorted by pivot."""
    work = [r for r in rows if r]
    basis: list[int] = []
    for r in work:
        for b in basis:
            if r & (b & -b):
                r ^= b
        if r:
            low = r & -r
            basis = [b ^ r if b & low else b for b in basis]
            basis.append(r)
    basis.sort(key=lambda b: b & -b)
    return tuple(basis)


@dataclass(frozen=True)
class Code:
    generator: tuple[int, ...]
    n: int

    def __init__(self, rows: Iterable[int], n: int):
        rows = list(rows)
        if not 1 <= n <= MAX_N:
            raise DimensionError(f"length must be in [1, {MAX_N}], got {n}")
        for r in rows:
            if not 0 <= r < (1 << n):
                raise DimensionError(f"row {r:#x} does not fit in length {n}")
        if gf2_rank(rows) != len(rows):
            raise ArgumentError("generator rows are linearly dependent")
        object.__setattr__(self, "generator", _rref(rows))
        object.__setattr__(self, "n", n)

    @property
    def k(self) -> int:
        return len(self.generator)

    @classmethod
    def from_text(cls, text: str) -> Code:
        """Parse ``k`` lines of ``n`` characters ``0``/``1``."""
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        if not lines:
            raise ArgumentError("empty generator matrix")
        n = len(lines[0])
        rows = []
        for ln in lines:
            if len(ln) != n or set(ln) - {"0", "1"}:
                raise ArgumentError(f"bad generator row {ln!r}")
            rows.append(sum(1 << j for j, ch in enumerate(ln) if ch == "1"))
        return cls(rows, n)

    def to_text(self) -> str:
        return "\n".join(
            "".join("1" if (r >> j) & 1 else "0" for j in range(self.n)) for r in self.generator
        )

    def codewords(self) -> Iterator[int]:
        """All ``2^k`` codewords, Gray-code order starting from 0."""
        if self.k > MAX_K:
            raise SizeError(f"k={self.k} exceeds enumeration cap {MAX_K}")
        word = 0
        yield word
        for step in range(1, 1 << self.k):
            word ^= self.generator[(step & -step).bit_length() - 1]
            yield word

    def columns(self) -> list[int]:
        """Column ``j`` as a ``k``-bit integer (bit ``r`` = row ``r``)."""
        return [
            sum(((row >> j) & 1) << r for r, row in enumerate(self.generator)) for j in range(self.n)
        ]

    def column_fingerprint(self) -> tuple[int, ...]:
        return tuple(sorted(self.columns()))


@dataclass(frozen=True)
class EquidistantProfile:
    k: int
    s: int
    r: int
    t: int

    @property
    def n(self) -> int:
        return ((1 << self.k) - 1) * self.s + self.r

    def to_json(self) -> dict:
        return {"k": self.k, "s": self.s, "r": self.r, "t": self.t, "n": self.n}


def is_equidistant(C: Code) -> int | None:
    """The common weight of all non-zero codewords, or ``None``."""
    if C.k > MAX_K:
        raise SizeError(f"k={C.k} exceeds enumeration cap {MAX_K}")
    weights = {w.bit_count() for w in C.codewords() if w}
    if len(weights) == 1:
        return weights.pop()
    return None


def bonis_decompose(C: Code) -> EquidistantProfile:
    """Read off ``(k, s, r, t)`` from the column multiset of an equidistant code."""
    t = is_equidistant(C)
    if t is None:
        raise StructureError("code is not equidistant")
    counts = Counter(C.columns())
    r = counts.pop(0, 0)
    nonzero = set(range(1, 1 << C.k))
    if set(counts) != nonzero or len(set(counts.values())) != 1:
        raise InconsistencyError(f"equidistant code with irregular columns: {dict(counts)}")
    s = next(iter(counts.values()))
    prof = EquidistantProfile(C.k, s, r, t)
    if prof.n != C.n or t != (1 << (C.k - 1)) * s:
        raise InconsistencyError(f"profile {prof} violates n=(2^k-1)s+r, t=2^(k-1)s")
    return prof


def simplex_code(k: int) -> Code:
    return construct_replicated_simplex(k, 1, 0)


def construct_replicated_simplex(k: int, s: int, r: int) -> Code:
    """Generator whose columns are each non-zero vector of GF(2)^k ``s`` times, then ``r`` zeros."""
    if k < 1 or s < 1 or r < 0:
        raise ArgumentError(f"need k>=1, s>=1, r>=0; got k={k}, s={s}, r={r}")
    cols = [v for v in range(1, 1 << k) for _ in range(s)] + [0] * r
    n = len(cols)
    rows = [sum(((c >> i) & 1) << j for j, c in enumerate(cols)) for i in range(k)]
    return Code(rows, n)


def max_equidistant_dim(n: int, t: int) -> int:
    """Largest ``k`` with some ``s >= 1`` such that ``t = 2^(k-1) s`` and ``n >= (2^k - 1) s``; 0 if none."""
    best = 0
    k = 1
    while (1 << (k - 1)) <= t:
        step = 1 << (k - 1)
        if t % step == 0:
            s = t // step
            if n >= ((1 << k) - 1) * s:
                best = k
        k += 1
    return best


def subspace_code_bridge(G: Geometry, X: Iterable[int]) -> Code:
    """The code whose non-zero words are the supports of the singular subspace ``X``."""
    idx = sorted(set(X))
    if not idx:
        raise ArgumentError("empty point set")
    masks = {G.points[i] for i in idx}
    for a in masks:
        for b in masks:
            if a != b and a ^ b not in masks:
                raise ArgumentError("point set is not closed under the third-point operation")
    basis = _rref(list(masks))
    C = Code(basis, G.n)
    if (1 << C.k) - 1 != len(masks):
        raise InconsistencyError("closed point set is not the projectivisation of its span")
    return C


def code_to_subspace(G: Geometry, C: Code) -> tuple[int, ...]:
    """Inverse of :func:`subspace_code_bridge`: the points of the non-zero codewords."""
    if C.n != G.n:
        raise DimensionError(f"code length {C.n} vs geometry n={G.n}")
    out = []
    for w in C.codewords():
        if not w:
            continue
        if w not in G.index:
            raise ArgumentError(f"codeword of weight {w.bit_count()} is not a point of weight {2 * G.m}")
        out.append(G.index[w])
    return tuple(sorted(out))
