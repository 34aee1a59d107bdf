"""Exact reference computations for small graphs.

Node sets are handled as Python int bitmasks internally. Every entry point
refuses graphs above its node budget instead of approximating.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .cover import minimal_cover
from .graph import Graph

DEFAULT_EXACT_BUDGET = 64
DEFAULT_UNION_BUDGET = 24


class BudgetExceeded(ValueError):
    pass


@dataclass(frozen=True)
class ExactResult:
    kstar: int
    witness: frozenset[int]
    alpha: int


def _check_budget(g: Graph, budget: int) -> None:
    if g.n > budget:
        raise BudgetExceeded(f"graph has {g.n} nodes, oracle budget is {budget}")


def _masks(g: Graph) -> list[int]:
    out = []
    for nbrs in g.adjacency:
        m = 0
        for w in nbrs:
            m |= 1 << w
        out.append(m)
    return out


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _from_mask(mask: int) -> frozenset[int]:
    return frozenset(_bits(mask))


def _matching_lb(nb: list[int], alive: int) -> int:
    """Size of a greedy maximal matching inside ``alive``; lower-bounds any cover."""
    size = 0
    free = alive
    while free:
        low = free & -free
        v = low.bit_length() - 1
        free ^= low
        partners = nb[v] & free
        if partners:
            free ^= partners & -partners
            size += 1
    return size


def exact_min_vertex_cover(g: Graph, node_budget: int = DEFAULT_EXACT_BUDGET) -> ExactResult:
    """Minimum vertex cover by branch and bound.

    Branches on a maximum-degree vertex ``v`` of the undecided subgraph: take
    ``v``, or take all of its undecided neighbors. Degree-one vertices are
    resolved by taking their neighbor, vertices of degree above the remaining
    budget are forced, and a greedy matching bounds each subtree from below.
    """
    _check_budget(g, node_budget)
    nb = _masks(g)
    seed_cover = minimal_cover(g, 0)[1].nodes
    best = [len(seed_cover), sum(1 << v for v in seed_cover)]

    def solve(alive: int, size: int, taken: int) -> None:
        while True:
            if size >= best[0]:
                return
            budget = best[0] - 1 - size
            vmax, dmax, forced = -1, 0, 0
            for v in _bits(alive):
                d = (nb[v] & alive).bit_count()
                if d == 0:
                    alive &= ~(1 << v)
                elif d == 1:
                    forced |= nb[v] & alive
                    break
                elif d > budget:
                    forced |= 1 << v
                    break
                elif d > dmax:
                    vmax, dmax = v, d
            if forced:
                cnt = forced.bit_count()
                alive &= ~forced
                size += cnt
                taken |= forced
                continue
            if dmax == 0:
                best[0], best[1] = size, taken
                return
            if size + _matching_lb(nb, alive) >= best[0]:
                return
            break
        v = vmax
        bit = 1 << v
        solve(alive & ~bit, size + 1, taken | bit)
        nv = nb[v] & alive
        solve(alive & ~(nv | bit), size + nv.bit_count(), taken | nv)

    all_nodes = (1 << g.n) - 1
    solve(all_nodes, 0, 0)
    kstar = best[0]
    return ExactResult(kstar=kstar, witness=_from_mask(best[1]), alpha=g.n - kstar)


def iter_minimal_covers(g: Graph, k: int, node_budget: int = DEFAULT_UNION_BUDGET) -> Iterator[frozenset[int]]:
    """Yield every minimal vertex cover of size at most ``k``, each exactly once.

    Branches on an undecided endpoint ``u`` of an uncovered edge: either ``u``
    joins the cover, or ``u`` stays out and all its neighbors join. A partial
    cover is abandoned when it exceeds ``k`` (after a matching lower bound)
    or when some member already has its whole neighborhood inside the cover,
    since covers only grow along a branch and that member can never become
    necessary.
    """
    _check_budget(g, node_budget)
    if k < 0:
        return
    nb = _masks(g)

    def redundant(inc: int, new: int) -> bool:
        # only members touched by the latest additions can have changed status
        check = (new | _neighborhood(nb, new)) & inc
        for v in _bits(check):
            if nb[v] & ~inc == 0:
                return True
        return False

    def rec(inc: int, und: int) -> Iterator[int]:
        size = inc.bit_count()
        if size > k:
            return
        u, du = -1, 0
        for v in _bits(und):
            d = (nb[v] & und).bit_count()
            if d > du:
                u, du = v, d
        if du == 0:
            if all(nb[v] & ~inc for v in _bits(inc)):
                yield inc
            return
        if size + _matching_lb(nb, und) > k:
            return
        bit = 1 << u
        if not redundant(inc | bit, bit):
            yield from rec(inc | bit, und & ~bit)
        add = nb[u] & ~inc
        if not redundant(inc | add, add):
            yield from rec(inc | add, und & ~(add | bit))

    # isolated nodes are never in a minimal cover
    und = 0
    for v in range(g.n):
        if nb[v]:
            und |= 1 << v
    for cover in rec(0, und):
        yield _from_mask(cover)


def _neighborhood(nb: list[int], mask: int) -> int:
    out = 0
    for v in _bits(mask):
        out |= nb[v]
    return out


def union_minimal_covers_upto(g: Graph, k: int, node_budget: int = DEFAULT_UNION_BUDGET) -> frozenset[int]:
    """``U(k)``: nodes lying in some minimal vertex cover of size at most ``k``."""
    out: set[int] = set()
    for cover in iter_minimal_covers(g, k, node_budget):
        out |= cover
    return frozenset(out)


def unions_by_size(g: Graph, kmax: int, node_budget: int = DEFAULT_UNION_BUDGET) -> dict[int, frozenset[int]]:
    """``{k: U(k)}`` for ``k = 0..kmax`` from a single enumeration."""
    by_size: dict[int, set[int]] = {}
    for cover in iter_minimal_covers(g, kmax, node_budget):
        by_size.setdefault(len(cover), set()).update(cover)
    out: dict[int, frozenset[int]] = {}
    acc: set[int] = set()
    for k in range(kmax + 1):
        acc |= by_size.get(k, set())
        out[k] = frozenset(acc)
    return out
