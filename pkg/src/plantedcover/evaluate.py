"""Recovery metrics against a labelled core and the temporal evaluation sweep."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass
from typing import Iterable, Sequence

from ._random import Seed, child_seed, make_rng
from .graph import CoreLabel, Graph, TemporalEdgeList, snapshot_series
from .rank import DEFAULT_COVERS, Ranking, rank_nodes

CSV_HEADER = "cutoff,method,pcs,auprc,pcs_upper,auprc_upper,n,m\n"


def _core_ids(core: CoreLabel | Iterable[int]) -> frozenset[int]:
    ids = core.core if isinstance(core, CoreLabel) else frozenset(core)
    if not ids:
        raise ValueError("core must be non-empty")
    return ids


def _ordered_ids(r: Ranking | Sequence[int]) -> Sequence[int]:
    return r.external_order() if isinstance(r, Ranking) else r


def precision_at_core_size(r: Ranking | Sequence[int], core: CoreLabel | Iterable[int]) -> float:
    """Fraction of the top ``|C|`` ranked nodes that are core.

    ``|C|`` counts every labelled core node, including ones absent from the graph.
    """
    ids = _core_ids(core)
    top = _ordered_ids(r)[: len(ids)]
    return sum(1 for x in top if x in ids) / len(ids)


def auprc(r: Ranking | Sequence[int], core: CoreLabel | Iterable[int]) -> float:
    """Uninterpolated average precision; unranked core nodes contribute zero."""
    ids = _core_ids(core)
    hits = 0
    total = 0.0
    for pos, x in enumerate(_ordered_ids(r), start=1):
        if x in ids:
            hits += 1
            total += hits / pos
    return total / len(ids)


def upper_bounds(g: Graph, core: CoreLabel | Iterable[int], seed: Seed = 0) -> tuple[float, float]:
    """Scores of the ideal ordering: present core nodes first, the rest shuffled."""
    ids = _core_ids(core)
    present = sorted(x for x in g.ids if x in ids)
    rest = [x for x in g.ids if x not in ids]
    rest = [rest[i] for i in make_rng(seed).permutation(len(rest)).tolist()]
    ideal = present + rest
    return len(present) / len(ids), auprc(ideal, ids)


@dataclass(frozen=True)
class EvalRow:
    cutoff: int
    method: str
    pcs: float
    auprc: float
    pcs_upper: float
    auprc_upper: float
    n_nodes: int
    n_edges: int

    def to_csv(self) -> str:
        return ",".join(repr(v) if isinstance(v, float) else str(v) for v in astuple(self)) + "\n"


def evaluate_graph(
    g: Graph,
    core: CoreLabel,
    methods: Sequence[str],
    cutoff: int = 0,
    n_covers: int = DEFAULT_COVERS,
    seed: Seed = 0,
) -> list[EvalRow]:
    pcs_up, ap_up = upper_bounds(g, core, child_seed(seed, 1))
    rows = []
    for method in methods:
        r = rank_nodes(g, method, n_covers, child_seed(seed, 0))
        rows.append(
            EvalRow(cutoff, method, precision_at_core_size(r, core), auprc(r, core), pcs_up, ap_up, g.n, g.m)
        )
    return rows


def _eval_job(args) -> list[EvalRow]:
    return evaluate_graph(*args)


def temporal_sweep(
    tel: TemporalEdgeList,
    core: CoreLabel,
    methods: Sequence[str],
    window: int,
    n_covers: int = DEFAULT_COVERS,
    seed: Seed = 0,
    workers: int = 1,
) -> list[EvalRow]:
    """Evaluate every method on each cumulative snapshot; rows ordered by cutoff.

    Snapshot ``r`` (1-based) draws its randomness from ``(seed, r)``.
    """
    if tel.records and not tel.timestamped:
        raise ValueError("temporal sweep needs timestamped records")
    _core_ids(core)
    jobs = [
        (g, core, tuple(methods), cutoff, n_covers, child_seed(seed, r))
        for r, (cutoff, g) in enumerate(snapshot_series(tel, window), start=1)
    ]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_eval_job, jobs))
    else:
        parts = [_eval_job(j) for j in jobs]
    return [row for part in parts for row in part]


def rows_to_csv(rows: Iterable[EvalRow]) -> str:
    return CSV_HEADER + "".join(r.to_csv() for r in rows)
