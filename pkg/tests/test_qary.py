from __future__ import annotations

import itertools
import random

import networkx as nx
import pytest

from eqgeom import qary
from eqgeom.errors import ArgumentError, DimensionError, SizeError


@pytest.fixture(scope="module")
def H3():
    return qary.build_qgeometry(3, 2)


@pytest.fixture(scope="module")
def H5():
    return qary.build_qgeometry(5, 2)


def _span_weights(x, y, q):
    """Weights of every non-zero ``a x + b y``, straight from the definition."""
    out = set()
    for a, b in itertools.product(range(q), repeat=2):
        if a or b:
            out.add(sum(1 for u, v in zip(x, y) if (a * u + b * v) % q))
    return out


def test_qvector_normalisation():
    v = qary.QVector.normalized((0, 2, 1, 0), 3)
    assert v.entries == (0, 1, 2, 0) and v.weight == 2
    assert str(v) == "(0,1,2,0)"
    with pytest.raises(ArgumentError):
        qary.QVector((0, 2, 1), 3)
    with pytest.raises(ArgumentError):
        qary.QVector.normalized((0, 0), 3)
    with pytest.raises(ArgumentError):
        qary.QVector((1, 3), 3)


def test_point_counts(H3, H5):
    assert len(H3) == qary.point_count(3, 2) == 16
    assert len(H5) == qary.point_count(5, 2) == 1536
    assert (H5.n, H5.t) == (6, 5)
    assert all(H3.point(i).weight == 3 for i in range(len(H3)))
    assert len({tuple(r) for r in H5.points}) == len(H5)


def test_binary_and_bad_fields_rejected():
    with pytest.raises(ArgumentError):
        qary.build_qgeometry(2, 3)
    with pytest.raises(ArgumentError):
        qary.build_qgeometry(4, 2)
    with pytest.raises(ArgumentError):
        qary.build_qgeometry(3, 1)
    with pytest.raises(SizeError):
        qary.build_qgeometry(7, 3)


def test_example_pair(H5):
    P, P2 = (0, 1, 1, 1, 1, 1), (0, 1, 1, 1, 2, 2)
    assert not qary.qary_collinear(H5, P, P2)
    assert qary.qary_common_neighbors(H5, P, P2) == []


def test_collinear_witness(H5):
    P = (0, 1, 1, 1, 1, 1)
    hits = [perm for perm in itertools.permutations(range(5)) if qary.qary_collinear(H5, P, (1,) + perm)]
    assert (0, 1, 2, 3, 4) in hits
    for perm in hits:
        assert _span_weights(P, (1,) + perm, 5) == {5}


def test_equal_points_are_not_collinear(H5):
    P = (0, 1, 1, 1, 1, 1)
    assert not qary.qary_collinear(H5, P, (0, 2, 2, 2, 2, 2))
    assert qary.qary_common_neighbors(H5, P, P) == [int(i) for i in H5.neighbors_mask(H5.index_of(P)).nonzero()[0]]


def test_common_neighbours_of_adjacent_pair_at_q3(H3):
    a = 0
    b = next(j for j in range(len(H3)) if qary.qary_collinear(H3, a, j))
    common = qary.qary_common_neighbors(H3, a, b)
    assert common
    line = {H3.index_of(p) for p in qary.line_points(H3, a, b)}
    assert (line - {a, b}) <= set(common)


@pytest.mark.parametrize("q", [3, 5])
def test_column_criterion_matches_span_weights(q, H3, H5):
    H = H3 if q == 3 else H5
    rnd = random.Random(q)
    pairs = list(itertools.combinations(range(len(H)), 2)) if len(H) < 100 else [
        tuple(rnd.sample(range(len(H)), 2)) for _ in range(2000)
    ]
    for a, b in pairs:
        x, y = H.points[a].tolist(), H.points[b].tolist()
        want = _span_weights(x, y, q) == {H.t}
        assert qary.qary_collinear(H, a, b) == want == qary.line_weights_ok(H, a, b)
        assert qary.qary_collinear(H, b, a) == want


def test_connectivity_and_diameter(H3, H5):
    assert qary.qary_connectivity_and_diameter(H3) == (True, 2)
    g = nx.Graph()
    for a, b in itertools.combinations(range(len(H3)), 2):
        if qary.qary_collinear(H3, a, b):
            g.add_edge(a, b)
    assert nx.diameter(g) == 2
    conn, diam = qary.qary_connectivity_and_diameter(H5)
    assert conn and diam == 3
    assert qary.qary_connectivity_and_diameter(H5, diameter=False) == (True, None)


def test_index_of_errors(H3):
    with pytest.raises(DimensionError):
        H3.index_of((1, 1, 1))
    with pytest.raises(ArgumentError):
        H3.index_of((1, 1, 0, 0))
    assert H3.index_of((2, 2, 2, 0)) == H3.index_of((1, 1, 1, 0))


def test_line_points(H5):
    a, b = 0, 1
    pts = qary.line_points(H5, a, b)
    assert len(pts) == 6 and len(set(pts)) == 6
    with pytest.raises(ArgumentError):
        qary.line_points(H5, a, a)


def test_off_geometry_profile(H3):
    prof = qary.non_collinear_line_profile(H3)
    total = sum(prof.values())
    noncollinear = sum(1 for a, b in itertools.combinations(range(16), 2) if not qary.qary_collinear(H3, a, b))
    assert total == noncollinear and min(prof) >= 1


@pytest.mark.parametrize("q,n,t", [(3, 4, 3), (5, 6, 5), (7, 8, 7), (3, 5, 2)])
def test_difference_witnesses_span(q, n, t):
    wit = qary.difference_witnesses(q, n, t)
    assert len(wit) == n
    for i, (x, y) in enumerate(wit):
        assert sum(1 for v in x if v) == t == sum(1 for v in y if v)
        assert [(a - b) % q for a, b in zip(x, y)] == [1 if j == i else 0 for j in range(n)]


def test_json(H3):
    assert H3.to_json() == {"q": 3, "k": 2, "n": 4, "t": 3, "num_points": 16, "connected": True, "diameter": 2}
