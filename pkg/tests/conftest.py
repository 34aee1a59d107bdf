import itertools
import random

import pytest
from hypothesis import strategies as st

from plantedcover.graph import Graph


def ext(g, internal):
    return g.to_external(internal)


def internal(g, external):
    return g.to_internal(external)


@pytest.fixture
def p3():
    return Graph.from_edges([(1, 2), (2, 3)])


@pytest.fixture
def k3():
    return Graph.from_edges([(1, 2), (2, 3), (1, 3)])


@pytest.fixture
def star5():
    return Graph.from_edges([(1, leaf) for leaf in range(2, 6)])


@pytest.fixture
def three_edges():
    return Graph.from_edges([(1, 2), (3, 4), (5, 6)])


@pytest.fixture
def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(outer + spokes + inner)


def erdos_renyi(n, p, rng):
    edges = [(i, j) for i, j in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(edges)


def random_graphs(count, n_max, seed, n_min=2):
    """Deterministic stream of non-empty ER graphs."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(n_min, n_max)
        g = erdos_renyi(n, rng.choice([0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9]), rng)
        if g.m:
            out.append(g)
    return out


@st.composite
def graphs(draw, max_nodes=12):
    n = draw(st.integers(2, max_nodes))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [e for e, keep in zip(pairs, mask) if keep]
    if not edges:
        edges = [(0, 1)]
    return Graph.from_edges(edges)


def brute_force_covers(g):
    """All vertex covers of ``g`` as frozensets of internal indices."""
    out = []
    edges = g.edges()
    for mask in range(1 << g.n):
        if all(mask >> u & 1 or mask >> v & 1 for u, v in edges):
            out.append(frozenset(i for i in range(g.n) if mask >> i & 1))
    return out


def brute_force_union(g, k):
    covers = brute_force_covers(g)
    cover_set = set(covers)
    union = set()
    for c in covers:
        if len(c) <= k and all(c - {v} not in cover_set for v in c):
            union |= c
    return frozenset(union)
