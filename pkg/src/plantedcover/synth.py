"""Core-fringe stochastic block model and checks of its structural guarantees."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._random import make_rng
from .graph import CoreLabel, Graph, TemporalEdgeList
from .oracle import DEFAULT_UNION_BUDGET, union_minimal_covers_upto


@dataclass(frozen=True)
class SbmParams:
    """Two blocks: core ``0..k-1`` and fringe ``k..n-1``; no fringe-fringe edges."""

    k: int
    n: int
    p: float
    q: float
    seed: int = 0

    def __post_init__(self):
        if not 1 <= self.k <= self.n:
            raise ValueError(f"need 1 <= k <= n, got k={self.k}, n={self.n}")
        for name in ("p", "q"):
            val = getattr(self, name)
            if not 0.0 <= val <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {val}")


def sbm_pairs(k: int, n: int) -> np.ndarray:
    """Eligible pairs in canonical order: core-core ``(i<j)``, then core-fringe."""
    iu, ju = np.triu_indices(k, 1)
    cc = np.stack([iu, ju], axis=1)
    ci, fi = np.meshgrid(np.arange(k), np.arange(k, n), indexing="ij")
    cf = np.stack([ci.ravel(), fi.ravel()], axis=1)
    return np.concatenate([cc, cf]).astype(np.int64).reshape(-1, 2)


def gen_core_fringe_sbm(params: SbmParams) -> tuple[Graph, CoreLabel]:
    """Sample one instance; isolated nodes are dropped from the graph but kept in the label."""
    k, n = params.k, params.n
    pairs = sbm_pairs(k, n)
    n_cc = k * (k - 1) // 2
    prob = np.full(len(pairs), params.q)
    prob[:n_cc] = params.p
    draws = make_rng(params.seed).random(len(pairs))
    kept = pairs[draws < prob]
    g = Graph.from_edges(kept.tolist())
    return g, CoreLabel(frozenset(range(k)))


def stamp_edges(g: Graph, span: int, seed: int = 0) -> TemporalEdgeList:
    """Attach integer timestamps in ``[0, span]`` and return records in time order.

    The first record sits at 0 and the last at ``span`` so the stream covers
    the full span exactly.
    """
    edges = g.edges()
    if not edges:
        return TemporalEdgeList(())
    rng = make_rng(seed, 1)
    times = np.sort(rng.integers(0, span + 1, size=len(edges)))
    times[0], times[-1] = 0, span
    perm = rng.permutation(len(edges))
    ids = g.ids
    recs = tuple((ids[edges[i][0]], ids[edges[i][1]], int(t)) for i, t in zip(perm.tolist(), times.tolist()))
    return TemporalEdgeList(recs)


def union_size_cap(k: int, p: float) -> float | None:
    """``k (3 ln k / p + 3)``, the high-probability cap on ``|U(k)|``; ``None`` if ``p == 0``."""
    if p <= 0:
        return None
    return k * (3 * math.log(k) / p + 3)


@dataclass(frozen=True)
class SbmTheoryReport:
    all_core_have_fringe_edge: bool
    cap: float | None
    union_size: int | None
    within_cap: bool | None


def check_sbm_theory(
    g: Graph, core: CoreLabel, params: SbmParams, node_budget: int = DEFAULT_UNION_BUDGET
) -> SbmTheoryReport:
    """Check the high-probability events behind the SBM containment result.

    ``union_size``/``within_cap`` are filled only when the graph fits the
    oracle budget and the cap is defined.
    """
    members = core.core
    all_fringe = True
    for c in members:
        i = g.index.get(c)
        if i is None or all(g.ids[w] in members for w in g.adjacency[i]):
            all_fringe = False
            break
    cap = union_size_cap(params.k, params.p)
    union_size = within = None
    if cap is not None and g.n <= node_budget:
        union_size = len(union_minimal_covers_upto(g, params.k, node_budget))
        within = union_size <= cap
    return SbmTheoryReport(all_fringe, cap, union_size, within)
