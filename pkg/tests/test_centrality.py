from collections import deque

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vitaledges import Graph, ValidationError, beas_select, edge_betweenness, fixture, robustness
from vitaledges.centrality import _betweenness

from oracles import (
    adjacency_sets,
    brute_betweenness,
    random_connected_graph,
    random_graph,
    random_tree,
    tree_split_sizes,
)


def test_path3():
    assert list(edge_betweenness(Graph(3, [(0, 1), (1, 2)]))) == [2.0, 2.0]


def test_triangle():
    assert list(edge_betweenness(fixture("triangle"))) == [1.0, 1.0, 1.0]


def test_path4_scores():
    assert list(edge_betweenness(fixture("path4"))) == [3.0, 4.0, 3.0]


def test_disconnected_pairs_contribute_nothing():
    g = Graph(5, [(0, 1), (2, 3), (3, 4)])
    assert list(edge_betweenness(g)) == [1.0, 2.0, 2.0]


def test_removed_edges_score_zero():
    scores = edge_betweenness(fixture("path4"), removed_edges=[1])
    assert list(scores) == [1.0, 0.0, 1.0]


@settings(max_examples=60, deadline=None)
@given(n=st.integers(2, 14), p=st.floats(0.05, 0.8), seed=st.integers(0, 2**32 - 1))
def test_matches_path_enumeration(n, p, seed):
    edges = random_graph(np.random.default_rng(seed), n, p)
    g = Graph(n, edges)
    expected = brute_betweenness(n, list(g.edges))
    got = edge_betweenness(g)
    for a, b in zip(got, expected):
        assert a == pytest.approx(float(b), abs=1e-9)


def _distance_sum(n, edges):
    adj = adjacency_sets(n, edges)
    total = 0
    for s in range(n):
        dist = {s: 0}
        q = deque([s])
        while q:
            v = q.popleft()
            for w in adj[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    q.append(w)
        total += sum(dist.values())
    return total // 2


@settings(max_examples=40, deadline=None)
@given(n=st.integers(2, 30), seed=st.integers(0, 2**32 - 1))
def test_total_equals_sum_of_distances(n, seed):
    rng = np.random.default_rng(seed)
    edges = random_connected_graph(rng, n, n + int(rng.integers(0, n)))
    g = Graph(n, edges)
    assert edge_betweenness(g).sum() == pytest.approx(_distance_sum(n, edges), rel=1e-12)


@settings(max_examples=30, deadline=None)
@given(n=st.integers(2, 100), seed=st.integers(0, 2**32 - 1))
def test_tree_formula(n, seed):
    edges = random_tree(np.random.default_rng(seed), n)
    g = Graph(n, edges)
    scores = edge_betweenness(g)
    for k in range(g.m):
        a, b = tree_split_sizes(n, list(g.edges), k)
        assert scores[k] == a * b


def test_beas_path4():
    assert beas_select(fixture("path4"), 1) == [1]


def test_beas_zero_cost():
    assert beas_select(fixture("toy16"), 0) == []


def test_beas_star_tie_break():
    assert beas_select(fixture("star4"), 2) == [0, 1]


def test_beas_rejects_excess_cost():
    with pytest.raises(ValidationError):
        beas_select(fixture("triangle"), 4)


def test_beas_is_adaptive():
    # recomputation after each deletion must match a manual loop
    g = fixture("toy16")
    picked = beas_select(g, 5)
    alive = np.ones(g.m, dtype=bool)
    for e in picked:
        scores = _betweenness(g, alive)
        live = np.flatnonzero(alive)
        top = scores[live].max()
        assert e == min(int(i) for i in live if scores[i] == pytest.approx(top, abs=1e-9))
        alive[e] = False


def test_beas_full_removal_reaches_edgeless_robustness():
    g = fixture("toy16")
    order = beas_select(g, g.m)
    assert sorted(order) == list(range(g.m))
    edgeless = Graph(g.n, [])
    # isolated nodes: s(Q) = 1/n for Q < n
    assert robustness(g, order) == robustness(edgeless) == (g.n - 1) / g.n**2
