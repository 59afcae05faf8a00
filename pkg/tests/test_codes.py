from __future__ import annotations

import itertools
import random

import pytest

from eqgeom import codes, geometry
from eqgeom.codes import Code, EquidistantProfile
from eqgeom.errors import ArgumentError, InconsistencyError, StructureError


def _largest_equidistant(n: int, t: int) -> int:
    """Depth-first search for the largest span whose non-zero words all have weight ``t``."""
    words = [w for w in range(1, 1 << n) if w.bit_count() == t]
    best = 0

    def grow(span: list[int], start: int) -> None:
        nonlocal best
        k = len(span).bit_length() - 1 if span else 0
        best = max(best, k)
        for pos in range(start, len(words)):
            v = words[pos]
            if v in span:
                continue
            if all((v ^ c).bit_count() == t for c in span if c):
                grow(span + [v ^ c for c in span], pos + 1)

    grow([0], 0)
    return best


def test_code_text_round_trip():
    C = Code.from_text("1100\n0110")
    assert C.k == 2 and C.n == 4
    assert Code.from_text(C.to_text()).generator == C.generator
    with pytest.raises(ArgumentError):
        Code.from_text("1100\n1100")
    with pytest.raises(ArgumentError):
        Code.from_text("110\n01")


def test_is_equidistant_examples():
    assert codes.is_equidistant(Code.from_text("1100\n0110")) == 2
    assert codes.is_equidistant(codes.simplex_code(3)) == 4
    assert codes.is_equidistant(Code.from_text("1000\n0100")) is None


def test_bonis_examples():
    assert codes.bonis_decompose(codes.simplex_code(3)) == EquidistantProfile(3, 1, 0, 4)
    cols = [1, 1, 2, 2, 3, 3, 0]
    rows = [sum(((c >> i) & 1) << j for j, c in enumerate(cols)) for i in range(2)]
    assert codes.bonis_decompose(Code(rows, 7)) == EquidistantProfile(2, 2, 1, 4)
    prof = codes.bonis_decompose(Code.from_text("1111"))
    assert prof == EquidistantProfile(1, 4, 0, 4)
    assert prof.to_json() == {"k": 1, "s": 4, "r": 0, "t": 4, "n": 4}


def test_bonis_rejects_non_equidistant():
    with pytest.raises(StructureError):
        codes.bonis_decompose(Code.from_text("1000\n0100"))


def test_bonis_round_trip_all_constructed():
    for k in range(1, 5):
        for s in range(1, 4):
            for r in range(4):
                C = codes.construct_replicated_simplex(k, s, r)
                assert codes.bonis_decompose(C) == EquidistantProfile(k, s, r, (1 << (k - 1)) * s)


def test_bonis_invariant_under_column_permutation_and_row_operations():
    rnd = random.Random(3)
    for k, s, r in [(2, 2, 1), (3, 1, 2), (3, 2, 0), (4, 1, 1)]:
        base = codes.construct_replicated_simplex(k, s, r)
        ref = base.column_fingerprint()
        for _ in range(10):
            cols = base.columns()
            rnd.shuffle(cols)
            rows = [sum(((c >> i) & 1) << j for j, c in enumerate(cols)) for i in range(k)]
            mixed = [rows[0]] + [row ^ (rows[0] if rnd.random() < 0.5 else 0) for row in rows[1:]]
            C = Code(mixed, base.n)
            assert codes.bonis_decompose(C) == codes.bonis_decompose(base)
            assert C.column_fingerprint() == ref


def test_equidistant_codes_with_equal_parameters_share_fingerprint():
    n, t = 6, 4
    prints = set()
    for a, b in itertools.combinations([w for w in range(1 << n) if w.bit_count() == t], 2):
        if (a ^ b).bit_count() == t:
            prints.add(Code([a, b], n).column_fingerprint())
    assert len(prints) == 1


@pytest.mark.parametrize("n,t,k", [(7, 4, 3), (6, 4, 2), (3, 2, 2)])
def test_max_equidistant_dim_examples(n, t, k):
    assert codes.max_equidistant_dim(n, t) == k


@pytest.mark.parametrize("n", range(2, 9))
def test_max_equidistant_dim_matches_search(n):
    for t in range(1, n + 1):
        assert codes.max_equidistant_dim(n, t) == _largest_equidistant(n, t), (n, t)


def test_bridge_line_of_6_2():
    G = geometry.build_geometry(6, 2)
    line = tuple(G.index_of(s) for s in ({1, 2, 3, 4}, {3, 4, 5, 6}, {1, 2, 5, 6}))
    C = codes.subspace_code_bridge(G, line)
    assert (C.n, C.k) == (6, 2)
    assert codes.bonis_decompose(C) == EquidistantProfile(2, 2, 0, 4)
    assert codes.code_to_subspace(G, C) == tuple(sorted(line))


def test_bridge_single_point():
    G = geometry.build_geometry(7, 2)
    C = codes.subspace_code_bridge(G, [5])
    assert (C.n, C.k) == (7, 1)
    assert codes.bonis_decompose(C).t == 4


def test_bridge_fano_planes_are_simplex_codes():
    G = geometry.build_geometry(7, 2)
    for X in geometry.maximal_singular_subspaces(G):
        C = codes.subspace_code_bridge(G, X)
        assert codes.bonis_decompose(C) == EquidistantProfile(3, 1, 0, 4)
        assert codes.code_to_subspace(G, C) == X


@pytest.mark.parametrize("n,m", [(n, m) for n in range(3, 11) for m in range(1, n // 3 + 1)])
def test_every_maximal_singular_subspace_has_largest_dimension(n, m):
    G = geometry.build_geometry(n, m)
    k = codes.max_equidistant_dim(n, 2 * m)
    for X in geometry.maximal_singular_subspaces(G):
        C = codes.subspace_code_bridge(G, X)
        assert C.k == k
        assert codes.bonis_decompose(C).t == 2 * m


def test_bridge_rejects_open_sets():
    G = geometry.build_geometry(6, 2)
    with pytest.raises(ArgumentError):
        codes.subspace_code_bridge(G, [G.index_of({1, 2, 3, 4}), G.index_of({3, 4, 5, 6})])


def test_irregular_columns_trap():
    class Fake(Code):
        def columns(self):
            return [1, 1, 2, 3]

    with pytest.raises(InconsistencyError):
        codes.bonis_decompose(Fake.from_text("1100\n0110"))
