"""Vertex-cover heuristics, minimality checks, kernelization and union-size bounds."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal, NamedTuple, Sequence

from ._random import Seed, child_seed, make_rng
from .graph import Graph

CoverKind = Literal["matching", "minimal", "exact"]


class NotACoverError(ValueError):
    pass


@dataclass(frozen=True)
class Cover:
    nodes: frozenset[int]
    kind: CoverKind
    matching_edges: tuple[tuple[int, int], ...] | None = None
    seed: Seed | None = None

    def __len__(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class BoundsReport:
    """Bracket ``l <= k* <= u`` and the two caps on the union of minimal covers.

    ``k_assumed`` is true when the caller gave no ``k`` and ``u`` stands in.
    """

    k: int
    l: int
    u: int
    bound_a: float
    bound_b: float
    trivial_cap: int
    n_runs: int
    k_assumed: bool = False

    @property
    def certified(self) -> bool:
        return self.l == self.u

    @property
    def capped_a(self) -> float:
        return min(self.bound_a, self.trivial_cap)

    @property
    def capped_b(self) -> float:
        return min(self.bound_b, self.trivial_cap)

    def to_text(self) -> str:
        rows = [
            ("k", self.k),
            ("k_assumed", str(self.k_assumed).lower()),
            ("n_runs", self.n_runs),
            ("l", self.l),
            ("u", self.u),
            ("kstar_certified", str(self.certified).lower()),
            ("bound_a", repr(self.bound_a)),
            ("bound_b", repr(self.bound_b)),
            ("trivial_cap", self.trivial_cap),
            ("capped_bound_a", repr(float(self.capped_a))),
            ("capped_bound_b", repr(float(self.capped_b))),
        ]
        return "".join(f"{k}={v}\n" for k, v in rows)


def _uncovered_edge(g: Graph, s) -> tuple[int, int] | None:
    for u, nbrs in enumerate(g.adjacency):
        if u in s:
            continue
        for v in nbrs:
            if v not in s:
                return u, v
    return None


def is_vertex_cover(g: Graph, s: Iterable[int]) -> bool:
    s = s if isinstance(s, (set, frozenset)) else set(s)
    return _uncovered_edge(g, s) is None


def is_minimal_cover(g: Graph, s: Iterable[int]) -> bool:
    """True iff no single node can be dropped from the cover ``s``.

    For a cover, ``s - {v}`` stays a cover exactly when every neighbor of
    ``v`` is in ``s``, so minimality is "each member sees a non-member".
    """
    s = s if isinstance(s, (set, frozenset)) else set(s)
    if not is_vertex_cover(g, s):
        raise NotACoverError("node set is not a vertex cover")
    adj = g.adjacency
    return all(any(w not in s for w in adj[v]) for v in s)


def greedy_matching_cover(
    g: Graph, seed: Seed = 0, edge_order: Sequence[tuple[int, int]] | None = None
) -> Cover:
    """Endpoints of a greedy maximal matching over a seeded random edge order.

    ``edge_order`` overrides the shuffle with an explicit processing order.
    """
    if edge_order is None:
        edges = g.edges()
        edge_order = [edges[i] for i in make_rng(seed).permutation(len(edges)).tolist()]
    matched = bytearray(g.n)
    matching = []
    for u, v in edge_order:
        if not matched[u] and not matched[v]:
            matched[u] = matched[v] = 1
            matching.append((u, v))
    nodes = frozenset(x for e in matching for x in e)
    return Cover(nodes, "matching", tuple(matching), seed)


def prune_to_minimal(g: Graph, c: Cover | Iterable[int], seed: Seed = 0) -> Cover:
    """Drop redundant nodes in one seeded random pass.

    A node is dropped iff all its neighbors are currently in the cover. One
    pass is enough: a kept node has a neighbor outside the cover, and since
    the cover only shrinks that neighbor stays outside. A dropped node's
    neighbors can never be dropped afterwards for the same reason, so the
    result is still a cover.
    """
    nodes = c.nodes if isinstance(c, Cover) else frozenset(c)
    in_cover = bytearray(g.n)
    for v in nodes:
        in_cover[v] = 1
    if not is_vertex_cover(g, nodes):
        raise NotACoverError("cannot prune a set that is not a vertex cover")
    adj = g.adjacency
    visit = sorted(nodes)
    order = make_rng(seed).permutation(len(visit))
    for i in order.tolist():
        v = visit[i]
        for w in adj[v]:
            if not in_cover[w]:
                break
        else:
            in_cover[v] = 0
    kept = frozenset(v for v in visit if in_cover[v])
    return Cover(kept, "minimal", None, seed)


def minimal_cover(g: Graph, seed: Seed = 0) -> tuple[Cover, Cover]:
    """One randomized matching cover and its pruned minimal subset."""
    m = greedy_matching_cover(g, child_seed(seed, 0))
    return m, prune_to_minimal(g, m, child_seed(seed, 1))


class Kernel(NamedTuple):
    forced: frozenset[int]
    infeasible: bool


def kernel_high_degree(g: Graph, k: int) -> Kernel:
    """Nodes of degree > k, which every cover of size <= k must contain.

    ``infeasible`` is set when there are more than ``k`` of them, in which
    case no cover of size <= k exists.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    forced = frozenset(v for v, nbrs in enumerate(g.adjacency) if len(nbrs) > k)
    return Kernel(forced, len(forced) > k)


def union_bound_a(k: int) -> float:
    if k < 0:
        raise ValueError("k must be non-negative")
    return (k + 1) ** 2 / 4 + k


def union_bound_b(k: int, kstar: int) -> float:
    if kstar < 0 or kstar > k:
        raise ValueError(f"need 0 <= kstar <= k, got kstar={kstar}, k={k}")
    return float((k - kstar + 2) * kstar)


def approx_kstar_bounds(g: Graph, n_runs: int = 20, seed: Seed = 0, k: int | None = None) -> BoundsReport:
    """Bracket the minimum cover size from repeated randomized matchings.

    ``l`` is the largest matching found (each matching edge needs its own
    cover node); ``u`` is the smallest pruned cover.
    """
    if n_runs < 1:
        raise ValueError("n_runs must be >= 1")
    l, u = 0, g.n
    for j in range(n_runs):
        m, pruned = minimal_cover(g, child_seed(seed, j))
        l = max(l, len(m.nodes) // 2)
        u = min(u, len(pruned.nodes))
    k_assumed = k is None
    if k is None:
        k = u
    return BoundsReport(
        k=k,
        l=l,
        u=u,
        bound_a=union_bound_a(k),
        bound_b=float((k - l + 2) * u),
        trivial_cap=g.n,
        n_runs=n_runs,
        k_assumed=k_assumed,
    )


class GuaranteedMembers(NamedTuple):
    prop3: frozenset[int]
    prop4: frozenset[int]
    neither: frozenset[int]

    @property
    def core_size(self) -> int:
        return len(self.prop3) + len(self.prop4) + len(self.neither)

    @property
    def frac_fringe_edge(self) -> float:
        return len(self.prop3) / self.core_size if self.core_size else 0.0

    @property
    def frac_interior_neighbor(self) -> float:
        return len(self.prop4) / self.core_size if self.core_size else 0.0


def guaranteed_members(g: Graph, core: Iterable[int]) -> GuaranteedMembers:
    """Split a planted cover into members certified to lie in ``U(|core|)``.

    ``prop3``: members with a neighbor outside the core. ``prop4``: remaining
    members adjacent to an interior node (a node whose whole closed
    neighborhood is in the core). ``neither``: the rest.
    """
    core = frozenset(core)
    if not is_vertex_cover(g, core):
        raise NotACoverError("planted core is not a vertex cover")
    adj = g.adjacency
    interior = {v for v in core if all(w in core for w in adj[v])}
    prop3 = frozenset(u for u in core if any(w not in core for w in adj[u]))
    prop4 = frozenset(u for u in core - prop3 if any(w in interior for w in adj[u]))
    return GuaranteedMembers(prop3, prop4, core - prop3 - prop4)

