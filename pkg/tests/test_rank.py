import itertools
import math
import random
from collections import deque

import numpy as np
import pytest
from conftest import erdos_renyi, ext, graphs
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import minimize

from plantedcover.cover import is_minimal_cover
from plantedcover.graph import Graph
from plantedcover.rank import (
    Ranking,
    be_init,
    be_objective,
    be_scores,
    betweenness,
    betweenness_rank,
    degree_rank,
    rank_nodes,
    umvc_covers,
    umvc_rank,
)


def assert_sorted_contract(r: Ranking):
    assert sorted(r.order) == list(range(len(r.ids)))
    keys = [(not r.in_union[i], -r.score[i], r.ids[i]) for i in r.order]
    assert keys == sorted(keys)


def test_umvc_star(star5):
    for seed in range(4):
        r = umvc_rank(star5, 20, seed)
        assert r.external_order() == [1, 2, 3, 4, 5]
        assert ext(star5, np.flatnonzero(r.in_union)) == {1}


def test_umvc_p3(p3):
    # every edge order of P3 matches an edge containing 2, and pruning keeps only 2
    for seed in range(10):
        r = umvc_rank(p3, 50, seed)
        union = ext(p3, np.flatnonzero(r.in_union))
        assert union <= {1, 2, 3}
        assert union == {2}
        assert r.external_order()[0] == 2


def test_umvc_default_covers():
    from plantedcover import rank

    assert rank.DEFAULT_COVERS == 300


def test_umvc_rejects_zero_covers(p3):
    with pytest.raises(ValueError):
        umvc_rank(p3, 0)


def test_degree_examples(star5, k3, p3):
    assert degree_rank(star5).external_order()[0] == 1
    r = degree_rank(k3)
    assert list(r.score) == [2, 2, 2]
    assert r.external_order() == [1, 2, 3]
    assert degree_rank(p3).external_order() == [2, 1, 3]


def test_degree_tie_break_uses_external_id():
    g = Graph.from_edges([(9, 4), (7, 3)])
    assert degree_rank(g).external_order() == [3, 4, 7, 9]


def _direct_be(g):
    """Minimize the BE objective on the nonnegative unit sphere directly."""
    f = lambda x: be_objective(g, x / np.linalg.norm(x))
    res = minimize(f, be_init(g), method="L-BFGS-B", bounds=[(1e-9, None)] * g.n)
    return res.x / np.linalg.norm(res.x), res.fun


def test_be_single_edge():
    r = be_scores(Graph.from_edges([(1, 2)]))
    assert r.converged
    np.testing.assert_allclose(r.score, [math.sqrt(2) / 2] * 2, atol=1e-9)
    x, _ = _direct_be(Graph.from_edges([(1, 2)]))
    np.testing.assert_allclose(r.score, x, atol=1e-5)


def test_be_star(star5):
    r = be_scores(star5)
    center = star5.index[1]
    leaves = [i for i in range(star5.n) if i != center]
    assert all(r.score[center] > r.score[i] for i in leaves)
    x, _ = _direct_be(star5)
    np.testing.assert_allclose(r.score, x, atol=1e-4)
    assert r.score[center] == pytest.approx(1 / math.sqrt(2), abs=1e-9)


def test_be_empty_graph():
    r = be_scores(Graph.from_edges([]))
    assert r.converged and r.score.size == 0


def test_be_nonconvergence_flag():
    g = Graph.from_edges([(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (0, 7)])
    r = be_scores(g, tol=1e-15, max_iter=2)
    assert not r.converged
    assert np.linalg.norm(r.score) == pytest.approx(1.0)


def test_be_bad_args(p3):
    with pytest.raises(ValueError):
        be_scores(p3, tol=0)
    with pytest.raises(ValueError):
        be_scores(p3, max_iter=0)


def test_be_close_to_direct_minimizer():
    rng = random.Random(3)
    checked = 0
    while checked < 60:
        g = erdos_renyi(rng.randint(3, 10), rng.random(), rng)
        if g.m < 2:
            continue
        checked += 1
        r = be_scores(g)
        _, best = _direct_be(g)
        ours = be_objective(g, r.score)
        assert ours <= be_objective(g, be_init(g)) + 1e-12
        assert ours <= best * (1 + 1e-6) + 1e-9


@settings(max_examples=80)
@given(graphs(14))
def test_be_objective_not_worse_than_init(g):
    r = be_scores(g)
    assert np.all(r.score >= 0)
    assert be_objective(g, r.score) <= be_objective(g, be_init(g)) + 1e-9


def test_betweenness_examples(p3, star5, k3):
    cb = dict(zip(p3.ids, betweenness(p3)))
    assert cb == {1: 0, 2: 1, 3: 0}
    cb = dict(zip(star5.ids, betweenness(star5)))
    assert cb[1] == 6 and all(cb[x] == 0 for x in range(2, 6))
    assert list(betweenness(k3)) == [0, 0, 0]
    assert betweenness_rank(star5).external_order()[0] == 1


def brute_betweenness(g):
    """Enumerate every shortest path explicitly for every unordered pair."""
    n = g.n
    dist = []
    for s in range(n):
        d = [-1] * n
        d[s] = 0
        q = deque([s])
        while q:
            v = q.popleft()
            for w in g.adjacency[v]:
                if d[w] < 0:
                    d[w] = d[v] + 1
                    q.append(w)
        dist.append(d)
    cb = [0.0] * n
    for s, t in itertools.combinations(range(n), 2):
        if dist[s][t] < 0:
            continue
        paths = []

        def walk(path):
            v = path[-1]
            if v == t:
                paths.append(path)
                return
            for w in g.adjacency[v]:
                if dist[s][w] == dist[s][v] + 1 and dist[w][t] == dist[v][t] - 1:
                    walk(path + [w])

        walk([s])
        for path in paths:
            for v in path[1:-1]:
                cb[v] += 1 / len(paths)
    return np.array(cb)


@settings(max_examples=100, deadline=None)
@given(graphs(12))
def test_betweenness_matches_path_enumeration(g):
    np.testing.assert_allclose(betweenness(g), brute_betweenness(g), atol=1e-9)


@settings(max_examples=40, deadline=None)
@given(graphs(12), st.integers(0, 10_000))
def test_umvc_union_members_come_from_minimal_covers(g, seed):
    covers = list(umvc_covers(g, 15, seed))
    for c in covers:
        assert is_minimal_cover(g, c.nodes)
    union = set().union(*(c.nodes for c in covers))
    r = umvc_rank(g, 15, seed)
    assert set(np.flatnonzero(r.in_union)) == union


@settings(max_examples=40, deadline=None)
@given(graphs(12), st.integers(0, 10_000), st.integers(1, 10), st.integers(0, 10))
def test_umvc_union_monotone_and_deterministic(g, seed, a, extra):
    ra = umvc_rank(g, a, seed)
    rb = umvc_rank(g, a + extra, seed)
    assert np.all(rb.in_union[ra.in_union])
    again = umvc_rank(g, a, seed)
    assert ra.order == again.order and np.array_equal(ra.in_union, again.in_union)


@settings(max_examples=40, deadline=None)
@given(graphs(12), st.sampled_from(["umvc", "degree", "be", "betweenness"]))
def test_sort_contract(g, method):
    assert_sorted_contract(rank_nodes(g, method, 10, 0))


def test_unknown_method(p3):
    with pytest.raises(ValueError):
        rank_nodes(p3, "pagerank")


def test_csv_format(star5):
    text = umvc_rank(star5, 5, 0).to_csv()
    lines = text.splitlines()
    assert lines[0] == "rank,external_id,score,in_union,method"
    assert lines[1] == "1,1,4.0,1,umvc"
    assert len(lines) == 1 + star5.n
