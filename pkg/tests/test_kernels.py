from __future__ import annotations

import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eqgeom import _purekernels as pure
from eqgeom import automorphisms, geometry, kernels

fast = pytest.importorskip("eqgeom._speedups")


def test_backend_names():
    assert pure.BACKEND == "python"
    assert fast.BACKEND != "python"
    assert kernels.BACKEND in (pure.BACKEND, fast.BACKEND)


@st.composite
def graphs(draw, max_n=90):
    n = draw(st.integers(0, max_n))
    p = draw(st.floats(0.05, 0.9))
    rnd = random.Random(draw(st.integers(0, 2**32)))
    adj = [0] * n
    for a, b in itertools.combinations(range(n), 2):
        if rnd.random() < p:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
    return adj


def _nx(adj):
    g = nx.Graph()
    g.add_nodes_from(range(len(adj)))
    for v, row in enumerate(adj):
        for u in range(v):
            if (row >> u) & 1:
                g.add_edge(u, v)
    return g


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 2**70), max_size=80), st.integers(0, 6))
def test_intersection_graph_agrees(masks, size):
    want = pure.intersection_graph(masks, size)
    assert fast.intersection_graph(masks, size) == want
    for a, b in itertools.combinations(range(len(masks)), 2):
        assert ((want[a] >> b) & 1) == ((masks[a] & masks[b]).bit_count() == size)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=70))
def test_maximal_cliques_agree(adj):
    a, b = pure.maximal_cliques(adj), fast.maximal_cliques(adj)
    assert sorted(a) == sorted(b)
    oracle = {sum(1 << v for v in c) for c in nx.find_cliques(_nx(adj))} if adj else set()
    assert set(a) == oracle


@settings(max_examples=40, deadline=None)
@given(graphs())
def test_bfs_and_diameter_agree(adj):
    g = _nx(adj)
    for s in range(min(len(adj), 5)):
        d = pure.bfs_distances(adj, s)
        assert fast.bfs_distances(adj, s) == d
        lengths = nx.single_source_shortest_path_length(g, s)
        assert d == [lengths.get(v, -1) for v in range(len(adj))]
    want = pure.diameter(adj)
    assert fast.diameter(adj) == want
    if adj:
        assert want == (nx.diameter(g) if nx.is_connected(g) else -1)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=80), st.integers(1, 3))
def test_refine_colors_graph_mode_agrees(adj, ncol):
    colors = [v % ncol for v in range(len(adj))]
    indptr, first = [0], []
    for row in adj:
        first.extend(u for u in range(len(adj)) if (row >> u) & 1)
        indptr.append(len(first))
    assert fast.refine_colors(colors, indptr, first, None) == pure.refine_colors(colors, indptr, first, None)


@pytest.mark.parametrize("n,m", [(6, 2), (7, 2), (9, 3)])
def test_refine_colors_pair_mode_agrees(n, m):
    G = geometry.build_geometry(n, m)
    indptr, first, second = [0], [], []
    for v in range(len(G.points)):
        for pos in G.lines_through[v]:
            a, b = (x for x in G.lines[pos] if x != v)
            first.append(a)
            second.append(b)
        indptr.append(len(first))
    colors = [0] * len(G.points)
    colors[0] = 1
    assert fast.refine_colors(colors, indptr, first, second) == pure.refine_colors(colors, indptr, first, second)


@pytest.mark.parametrize("n,m", [(6, 2), (7, 2), (8, 2)])
def test_classifier_agrees(n, m):
    G = geometry.build_geometry(n, m)
    einvs = [e for _, e in automorphisms.exceptional_candidates(G)]
    members = [[i for i, p in enumerate(G.points) if (p >> a) & 1] for a in range(n)]
    A, B = pure.Classifier(G.points, members, einvs), fast.Classifier(G.points, members, einvs)
    rnd = random.Random(n)
    N = len(G.points)
    maps = []
    for _ in range(30):
        perm = list(range(1, n + 1))
        rnd.shuffle(perm)
        f = automorphisms.permutation_point_map(G, perm)
        e = rnd.choice(einvs)
        maps.append(automorphisms.compose(f, automorphisms.inverse(e)))
        junk = list(range(N))
        rnd.shuffle(junk)
        maps.append(tuple(junk))
    for f in maps:
        ka, sa = A.classify(f)
        kb, sb = B.classify(f)
        assert (ka, None if sa is None else tuple(sa)) == (kb, None if sb is None else tuple(sb))
