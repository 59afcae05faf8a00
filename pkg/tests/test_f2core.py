from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from eqgeom.errors import ArgumentError, DimensionError, RangeError
from eqgeom.f2core import (
    F2Vector,
    LinearMap,
    apply,
    format_set,
    gf2_rank,
    hamming,
    make_special_map,
    parse_set,
    support_vector,
)


def _image_set(kind: str, idx: tuple[int, ...], n: int, k: int) -> set[int]:
    """Image support of ``e_k`` straight from the case definition."""
    full = set(range(1, n + 1))
    if kind == "l" and k == idx[0]:
        return full
    if kind in ("s", "s_prime") and k in idx:
        i, j = idx
        if kind == "s":
            return full - {k}
        return full - ({j} if k == i else {i})
    return {k}


def _oracle_apply(kind: str, idx: tuple[int, ...], n: int, support: set[int]) -> set[int]:
    """Coordinate ``c`` is set iff an odd number of images cover it."""
    return {c for c in range(1, n + 1) if sum(c in _image_set(kind, idx, n, k) for k in support) % 2}


# --- support_vector -------------------------------------------------------------


def test_support_vector_examples():
    assert str(support_vector(set(), 4)) == "0000"
    assert str(support_vector({1, 3}, 4)) == "1010"
    v = support_vector({1, 2, 3}, 3)
    assert str(v) == "111" and v.weight == 3


def test_support_vector_range_error():
    with pytest.raises(RangeError):
        support_vector({0}, 4)
    with pytest.raises(RangeError):
        support_vector({5}, 4)


def test_vector_length_cap():
    with pytest.raises(DimensionError):
        F2Vector(0, 65)
    with pytest.raises(DimensionError):
        F2Vector(4, 2)


def test_text_forms_round_trip():
    v = F2Vector.from_string("0110")
    assert v.support() == {2, 3}
    assert F2Vector.from_string(str(v)) == v
    assert parse_set("{1, 3}") == {1, 3}
    assert parse_set("{}") == frozenset()
    assert format_set({3, 1}) == "{1,3}"
    with pytest.raises(ArgumentError):
        parse_set("1,3")
    with pytest.raises(ArgumentError):
        F2Vector.from_string("012")


# --- hamming --------------------------------------------------------------------


def test_hamming_examples():
    assert hamming(F2Vector.from_string("1100"), F2Vector.from_string("1100")) == 0
    assert hamming(F2Vector.from_string("1100"), F2Vector.from_string("0110")) == 2
    u, v = support_vector({1, 2, 3, 4}, 6), support_vector({3, 4, 5, 6}, 6)
    assert hamming(u, v) == sum(a != b for a, b in zip(str(u), str(v))) == 4


def test_hamming_dimension_error():
    with pytest.raises(DimensionError):
        hamming(F2Vector.zero(3), F2Vector.zero(4))


def test_hamming_triangle_inequality_exhaustive():
    for n in (1, 4, 6):
        vecs = [F2Vector(b, n) for b in range(1 << n)]
        zero = F2Vector.zero(n)
        for u, v in itertools.product(vecs, repeat=2):
            assert hamming(u, v) == (u + v).weight
            assert hamming(u, zero) == u.weight
        for u, v, w in itertools.product(vecs, repeat=3):
            assert hamming(u, w) <= hamming(u, v) + hamming(v, w)


@given(st.integers(1, 64).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, (1 << n) - 1),
                                                      st.integers(0, (1 << n) - 1),
                                                      st.integers(0, (1 << n) - 1))))
def test_hamming_properties(args):
    n, a, b, c = args
    u, v, w = F2Vector(a, n), F2Vector(b, n), F2Vector(c, n)
    assert u + u == F2Vector.zero(n)
    assert hamming(u, v) == sum(x != y for x, y in zip(str(u), str(v)))
    assert hamming(u, w) <= hamming(u, v) + hamming(v, w)


# --- make_special_map and apply -------------------------------------------------


def test_l_example():
    M = make_special_map("l", (1,), 3)
    assert str(M(F2Vector.basis(1, 3))) == "111"
    image = apply(M, support_vector({1, 2}, 3))
    assert image == support_vector({1, 3}, 3) and image.weight == 2


def test_s_examples():
    M = make_special_map("s", (1, 2), 4)
    assert apply(M, support_vector({1, 3}, 4)) == support_vector({2, 4}, 4)
    assert apply(M, support_vector({1, 2}, 4)) == support_vector({1, 2}, 4)


def test_s_apply_matches_case_definition():
    M = make_special_map("s", (1, 2), 4)
    got = apply(M, support_vector({1, 2, 3}, 4))
    assert got.support() == _oracle_apply("s", (1, 2), 4, {1, 2, 3})


@pytest.mark.parametrize("kind,idx", [("l", (2,)), ("s", (1, 3)), ("s_prime", (2, 4)), ("s_prime", (4, 1))])
def test_apply_matches_oracle_exhaustive(kind, idx):
    for n in (5, 6, 7):
        M = make_special_map(kind, idx, n)
        for bits in range(1 << n):
            v = F2Vector(bits, n)
            assert apply(M, v).support() == _oracle_apply(kind, idx, n, set(v.support()))


def test_identity_apply():
    I = LinearMap.identity(5)
    for bits in range(32):
        assert apply(I, F2Vector(bits, 5)) == F2Vector(bits, 5)
    with pytest.raises(DimensionError):
        apply(I, F2Vector.zero(4))


@given(st.integers(3, 12), st.data())
def test_linearity(n, data):
    kind = data.draw(st.sampled_from(["l", "s", "s_prime"]))
    if kind == "l":
        idx = (data.draw(st.integers(1, n)),)
    else:
        idx = tuple(data.draw(st.lists(st.integers(1, n), min_size=2, max_size=2, unique=True)))
    M = make_special_map(kind, idx, n)
    a = data.draw(st.integers(0, (1 << n) - 1))
    b = data.draw(st.integers(0, (1 << n) - 1))
    u, v = F2Vector(a, n), F2Vector(b, n)
    assert M(u + v) == M(u) + M(v)


def test_special_map_errors():
    with pytest.raises(ArgumentError):
        make_special_map("s", (2, 2), 4)
    with pytest.raises(ArgumentError):
        make_special_map("l", (1, 2), 4)
    with pytest.raises(ArgumentError):
        make_special_map("x", (1,), 4)
    with pytest.raises(RangeError):
        make_special_map("l", (5,), 4)


def test_special_maps_are_invertible_involutions():
    for n in range(3, 13):
        maps = [make_special_map("l", (i,), n) for i in range(1, n + 1)]
        maps += [make_special_map(k, p, n) for k in ("s", "s_prime") for p in itertools.combinations(range(1, n + 1), 2)]
        for M in maps:
            assert M.is_invertible()
            assert M.compose(M) == LinearMap.identity(n)
            assert M.order() == 2


def test_l_preserves_weight_at_4m_minus_1():
    for n in (3, 7, 11):
        w = (n + 1) // 2
        for i in range(1, n + 1):
            M = make_special_map("l", (i,), n)
            assert all(M.apply_mask(x).bit_count() == w for x in range(1 << n) if x.bit_count() == w)


def test_s_maps_preserve_weight_at_4m():
    for n in (4, 8, 12):
        w = n // 2
        points = [x for x in range(1 << n) if x.bit_count() == w]
        for kind in ("s", "s_prime"):
            for i, j in itertools.combinations(range(1, n + 1), 2):
                M = make_special_map(kind, (i, j), n)
                assert all(M.apply_mask(x).bit_count() == w for x in points)


def test_case_c_map_breaks_weight_at_4m_plus_1():
    n, m = 9, 2
    M = LinearMap(tuple(1 << j for j in range(n - 1)) + ((1 << n) - 1,))
    weights = {M.apply_mask(x).bit_count() for x in range(1 << n) if x.bit_count() == 2 * m}
    assert 2 * m + 2 in weights


def test_permutation_map():
    P = LinearMap.permutation((2, 3, 1))
    assert P.is_permutation()
    assert apply(P, support_vector({1}, 3)) == support_vector({2}, 3)
    assert P.order() == 3
    with pytest.raises(ArgumentError):
        LinearMap.permutation((1, 1, 2))


def test_rank():
    assert gf2_rank([0b11, 0b10, 0b01]) == 2
    assert gf2_rank([]) == 0
    assert not LinearMap((1, 1)).is_invertible()
    with pytest.raises(ArgumentError):
        LinearMap((1, 1)).order()
