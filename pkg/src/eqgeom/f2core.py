"""GF(2) vectors and linear maps packed into machine words.

Coordinates are 1-based at the interface (``{1, ..., n}``) and 0-based in
storage: coordinate ``i`` lives in bit ``i - 1``. The text form of a vector
puts coordinate 1 leftmost.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ArgumentError, DimensionError, RangeError

MAX_N = 64

__all__ = [
    "F2Vector",
    "LinearMap",
    "MAX_N",
    "apply",
    "format_set",
    "gf2_rank",
    "hamming",
    "make_special_map",
    "mask_of",
    "parse_set",
    "support_of",
    "support_vector",
]


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1 or n > MAX_N:
        raise DimensionError(f"length must be an integer in [1, {MAX_N}], got {n!r}")


def mask_of(support: Iterable[int], n: int) -> int:
    """Bit mask of a 1-based coordinate set."""
    mask = 0
    for i in support:
        if not 1 <= i <= n:
            raise RangeError(f"coordinate {i} outside [1, {n}]")
        mask |= 1 << (i - 1)
    return mask


def support_of(mask: int) -> frozenset[int]:
    """1-based coordinate set of a bit mask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return frozenset(out)


def parse_set(text: str) -> frozenset[int]:
    """Parse the set text form, e.g. ``"{1,3}"``."""
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise ArgumentError(f"set must be written in braces: {text!r}")
    body = body[1:-1].strip()
    if not body:
        return frozenset()
    try:
        return frozenset(int(tok) for tok in re.split(r"\s*,\s*", body))
    except ValueError as exc:
        raise ArgumentError(f"bad set literal {text!r}") from exc


def format_set(support: Iterable[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(support)) + "}"


@dataclass(frozen=True, slots=True)
class F2Vector:
    """A length-``n`` vector over GF(2) stored as one word."""

    bits: int
    n: int

    def __post_init__(self) -> None:
        _check_n(self.n)
        if not 0 <= self.bits < (1 << self.n):
            raise DimensionError(f"bits {self.bits:#x} do not fit in length {self.n}")

    @classmethod
    def zero(cls, n: int) -> F2Vector:
        return cls(0, n)

    @classmethod
    def basis(cls, i: int, n: int) -> F2Vector:
        return cls(mask_of((i,), n), n)

    @classmethod
    def from_string(cls, text: str) -> F2Vector:
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise ArgumentError(f"vector text must be a non-empty 0/1 string: {text!r}")
        bits = 0
        for pos, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << pos
        return cls(bits, len(text))

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> frozenset[int]:
        return support_of(self.bits)

    def __add__(self, other: F2Vector) -> F2Vector:
        if not isinstance(other, F2Vector):
            return NotImplemented
        if other.n != self.n:
            raise DimensionError(f"length mismatch: {self.n} vs {other.n}")
        return F2Vector(self.bits ^ other.bits, self.n)

    __xor__ = __add__
    __sub__ = __add__

    def __str__(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.n))


def support_vector(support: Iterable[int], n: int) -> F2Vector:
    """The vector whose coordinates in ``support`` are 1 and all others 0."""
    _check_n(n)
    return F2Vector(mask_of(support, n), n)


def hamming(u: F2Vector, v: F2Vector) -> int:
    if u.n != v.n:
        raise DimensionError(f"length mismatch: {u.n} vs {v.n}")
    return (u.bits ^ v.bits).bit_count()


def gf2_rank(rows: Sequence[int]) -> int:
    """Rank of a list of bit-packed rows over GF(2)."""
    work = [r for r in rows if r]
    rank = 0
    while work:
        pivot = work.pop()
        if not pivot:
            continue
        rank += 1
        low = pivot & -pivot
        work = [r ^ pivot if r & low else r for r in work]
        work = [r for r in work if r]
    return rank


@dataclass(frozen=True, slots=True)
class LinearMap:
    """An ``n x n`` GF(2) matrix stored column-major: ``columns[j]`` is the image of ``e_{j+1}``."""

    columns: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.columns)
        _check_n(n)
        limit = 1 << n
        for c in self.columns:
            if not 0 <= c < limit:
                raise DimensionError(f"column {c:#x} does not fit in dimension {n}")

    @property
    def n(self) -> int:
        return len(self.columns)

    @classmethod
    def identity(cls, n: int) -> LinearMap:
        _check_n(n)
        return cls(tuple(1 << j for j in range(n)))

    @classmethod
    def permutation(cls, images: Sequence[int]) -> LinearMap:
        """Coordinate permutation sending ``e_i`` to ``e_{images[i-1]}`` (1-based images)."""
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise ArgumentError(f"not a permutation of [1, {n}]: {list(images)}")
        return cls(tuple(1 << (images[j] - 1) for j in range(n)))

    def apply_mask(self, x: int) -> int:
        out = 0
        j = 0
        while x:
            if x & 1:
                out ^= self.columns[j]
            x >>= 1
            j += 1
        return out

    def __call__(self, v: F2Vector) -> F2Vector:
        return apply(self, v)

    def compose(self, other: LinearMap) -> LinearMap:
        """``self`` after ``other``."""
        if other.n != self.n:
            raise DimensionError(f"dimension mismatch: {self.n} vs {other.n}")
        return LinearMap(tuple(self.apply_mask(c) for c in other.columns))

    def rank(self) -> int:
        return gf2_rank(self.columns)

    def is_invertible(self) -> bool:
        return self.rank() == self.n

    def is_permutation(self) -> bool:
        return sorted(self.columns) == [1 << j for j in range(self.n)]

    def order(self, bound: int | None = None) -> int:
        """Smallest ``k >= 1`` with ``self**k`` the identity."""
        if not self.is_invertible():
            raise ArgumentError("a singular map has no finite order")
        bound = (1 << self.n) if bound is None else bound
        ident = LinearMap.identity(self.n)
        power = self
        for k in range(1, bound + 1):
            if power == ident:
                return k
            power = self.compose(power)
        raise ArgumentError(f"order exceeds bound {bound}")

    def rows_text(self) -> str:
        n = self.n
        lines = []
        for i in range(n):
            lines.append("".join("1" if (self.columns[j] >> i) & 1 else "0" for j in range(n)))
        return "\n".join(lines)


def apply(M: LinearMap, v: F2Vector) -> F2Vector:
    """XOR of the columns of ``M`` selected by the set bits of ``v``."""
    if M.n != v.n:
        raise DimensionError(f"dimension mismatch: map {M.n} vs vector {v.n}")
    return F2Vector(M.apply_mask(v.bits), v.n)


def make_special_map(kind: str, indices: Sequence[int], n: int) -> LinearMap:
    """Build one of the non-monomial maps ``l_i``, ``s_ij`` or ``s'_ij``.

    * ``l``: ``e_i -> e_[n]``;
    * ``s``: ``e_i -> e_{[n]-{i}}``, ``e_j -> e_{[n]-{j}}``;
    * ``s_prime``: ``e_i -> e_{[n]-{j}}``, ``e_j -> e_{[n]-{i}}``.

    Every other basis vector is fixed.
    """
    _check_n(n)
    idx = list(indices)
    for i in idx:
        if not 1 <= i <= n:
            raise RangeError(f"index {i} outside [1, {n}]")
    full = (1 << n) - 1
    cols = [1 << j for j in range(n)]
    if kind == "l":
        if len(idx) != 1:
            raise ArgumentError("l needs exactly one index")
        cols[idx[0] - 1] = full
    elif kind in ("s", "s_prime"):
        if len(idx) != 2:
            raise ArgumentError(f"{kind} needs exactly two indices")
        i, j = idx
        if i == j:
            raise ArgumentError(f"{kind} needs two distinct indices, got {i} twice")
        bi, bj = 1 << (i - 1), 1 << (j - 1)
        if kind == "s":
            cols[i - 1] = full ^ bi
            cols[j - 1] = full ^ bj
        else:
            cols[i - 1] = full ^ bj
            cols[j - 1] = full ^ bi
    else:
        raise ArgumentError(f"unknown map kind {kind!r}; expected l, s or s_prime")
    M = LinearMap(tuple(cols))
    if not M.is_invertible():
        raise ArgumentError(f"{kind}{tuple(idx)} is singular for n={n}")
    return M
