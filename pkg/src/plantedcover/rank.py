"""Node orderings for core recovery: UMVC and the degree, BE and betweenness baselines."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from ._random import Seed, child_seed
from .cover import minimal_cover
from .graph import Graph

DEFAULT_COVERS = 300
METHODS = ("umvc", "degree", "be", "betweenness")


@dataclass(frozen=True, eq=False)
class Ranking:
    """Best-first node order with per-node scores.

    Sorted by ``(in_union desc, score desc, external id asc)``.
    """

    ids: tuple[int, ...]
    order: tuple[int, ...]
    score: np.ndarray
    in_union: np.ndarray
    method: str
    seed: Seed | None = None
    converged: bool = True

    @property
    def n(self) -> int:
        return len(self.order)

    def external_order(self) -> list[int]:
        return [self.ids[i] for i in self.order]

    def to_csv(self) -> str:
        lines = ["rank,external_id,score,in_union,method\n"]
        for r, i in enumerate(self.order, start=1):
            lines.append(
                f"{r},{self.ids[i]},{float(self.score[i])!r},{int(self.in_union[i])},{self.method}\n"
            )
        return "".join(lines)


def _make_ranking(g: Graph, score, in_union, method: str, seed=None, converged=True) -> Ranking:
    score = np.asarray(score, dtype=float)
    in_union = np.asarray(in_union, dtype=bool)
    ids = g.ids
    order = sorted(range(g.n), key=lambda i: (not in_union[i], -score[i], ids[i]))
    return Ranking(ids, tuple(order), score, in_union, method, seed, converged)


def umvc_covers(g: Graph, n_covers: int = DEFAULT_COVERS, seed: Seed = 0):
    """Yield ``n_covers`` randomized minimal covers; run ``j`` uses seed ``(seed, j)``."""
    for j in range(n_covers):
        yield minimal_cover(g, child_seed(seed, j))[1]


def umvc_rank(g: Graph, n_covers: int = DEFAULT_COVERS, seed: Seed = 0) -> Ranking:
    """Union of minimal covers first, then everything else; degree order within each part."""
    if n_covers < 1:
        raise ValueError("n_covers must be >= 1")
    in_union = np.zeros(g.n, dtype=bool)
    for cover in umvc_covers(g, n_covers, seed):
        in_union[list(cover.nodes)] = True
    return _make_ranking(g, g.degrees(), in_union, "umvc", seed)


def degree_rank(g: Graph) -> Ranking:
    return _make_ranking(g, g.degrees(), np.zeros(g.n, dtype=bool), "degree")


def _edge_arrays(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    edges = np.array(g.edges(), dtype=np.int64).reshape(-1, 2)
    return edges[:, 0], edges[:, 1]


def be_objective(g: Graph, s: np.ndarray) -> float:
    """Sum over edges of ``(1 - s_i s_j)^2``."""
    src, dst = _edge_arrays(g)
    return float(np.sum((1.0 - s[src] * s[dst]) ** 2))


def be_init(g: Graph) -> np.ndarray:
    deg = np.asarray(g.degrees(), dtype=float)
    norm = np.linalg.norm(deg)
    return deg / norm if norm > 0 else deg


def be_scores(g: Graph, tol: float = 1e-10, max_iter: int = 10_000) -> Ranking:
    """Borgatti-Everett core scores: minimize the edge residual on the unit sphere.

    Each step is a power-method-like update
    ``s <- normalize((I + 2 eta (A - D(s))) s)`` with ``D(s)_ii`` the sum of
    ``s_j^2`` over neighbors, i.e. a projected gradient step on
    ``sum_E (1 - s_i s_j)^2``. ``eta`` is halved until the objective does not
    increase, so the result never scores worse than the normalized-degree
    start. With ``eta <= 1/2`` the update keeps every score nonnegative.
    """
    if tol <= 0 or max_iter < 1:
        raise ValueError("need tol > 0 and max_iter >= 1")
    if g.m == 0:
        return _make_ranking(g, np.zeros(g.n), np.zeros(g.n, dtype=bool), "be")
    src, dst = _edge_arrays(g)
    n = g.n

    def objective(x):
        return float(np.sum((1.0 - x[src] * x[dst]) ** 2))

    s = be_init(g)
    f = objective(s)
    eta = 0.5
    converged = False
    for _ in range(max_iter):
        sq = s * s
        a_s = np.bincount(src, weights=s[dst], minlength=n) + np.bincount(dst, weights=s[src], minlength=n)
        d_s = np.bincount(src, weights=sq[dst], minlength=n) + np.bincount(dst, weights=sq[src], minlength=n)
        step = a_s - d_s * s
        while True:
            nxt = s + 2.0 * eta * step
            np.maximum(nxt, 0.0, out=nxt)
            nxt /= np.linalg.norm(nxt)
            f_next = objective(nxt)
            if f_next <= f or eta < 1e-12:
                break
            eta *= 0.5
        delta = float(np.max(np.abs(nxt - s)))
        if f_next > f:
            # no descent step left at machine precision
            converged = delta < tol
            break
        s, f = nxt, f_next
        eta = min(0.5, eta * 2.0)
        if delta < tol:
            converged = True
            break
    return _make_ranking(g, s, np.zeros(g.n, dtype=bool), "be", converged=converged)


def betweenness(g: Graph) -> np.ndarray:
    """Exact shortest-path betweenness, each unordered pair counted once (Brandes)."""
    adj = g.adjacency
    n = g.n
    cb = [0.0] * n
    for s in range(n):
        stack = []
        preds: list[list[int]] = [[] for _ in range(n)]
        sigma = [0] * n
        dist = [-1] * n
        sigma[s], dist[s] = 1, 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            stack.append(v)
            dv = dist[v] + 1
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = dv
                    queue.append(w)
                if dist[w] == dv:
                    sigma[w] += sigma[v]
                    preds[w].append(v)
        delta = [0.0] * n
        while stack:
            w = stack.pop()
            coeff = (1.0 + delta[w]) / sigma[w]
            for v in preds[w]:
                delta[v] += sigma[v] * coeff
            if w != s:
                cb[w] += delta[w]
    return np.asarray(cb) / 2.0


def betweenness_rank(g: Graph) -> Ranking:
    return _make_ranking(g, betweenness(g), np.zeros(g.n, dtype=bool), "betweenness")


def rank_nodes(g: Graph, method: str, n_covers: int = DEFAULT_COVERS, seed: Seed = 0) -> Ranking:
    if method == "umvc":
        return umvc_rank(g, n_covers, seed)
    if method == "degree":
        return degree_rank(g)
    if method == "be":
        return be_scores(g)
    if method == "betweenness":
        return betweenness_rank(g)
    raise ValueError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
