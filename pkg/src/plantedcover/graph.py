"""Edge-list ingestion, simple undirected graphs, and temporal snapshots."""

from __future__ import annotations

import io
from bisect import bisect_left
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence, TextIO

SECONDS_PER_DAY = 86400


class ParseError(ValueError):
    """Raised for malformed edge-list or core-file input."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class TemporalEdgeList:
    """Raw interaction records ``(u, v, t)`` in file order.

    ``t`` is ``None`` on every record when the input carried no timestamps.
    """

    records: tuple[tuple[int, int, int | None], ...]
    source_path: str = ""

    @property
    def timestamped(self) -> bool:
        return bool(self.records) and self.records[0][2] is not None

    def __len__(self) -> int:
        return len(self.records)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[int]], source_path: str = "") -> "TemporalEdgeList":
        records = []
        for rec in pairs:
            if len(rec) == 2:
                records.append((int(rec[0]), int(rec[1]), None))
            else:
                records.append((int(rec[0]), int(rec[1]), int(rec[2])))
        tel = cls(tuple(records), source_path)
        _check_uniform_timestamps(tel.records)
        return tel


def _check_uniform_timestamps(records) -> None:
    if not records:
        return
    has_t = records[0][2] is not None
    for i, rec in enumerate(records):
        if (rec[2] is not None) != has_t:
            raise ParseError("mixed timestamped and untimestamped records", i + 1)


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph over internal indices ``0..n-1``.

    ``ids[i]`` is the external id of internal node ``i``; ``adjacency[i]`` is
    the sorted tuple of its neighbors. Instances are immutable once built.
    """

    ids: tuple[int, ...]
    adjacency: tuple[tuple[int, ...], ...]
    m: int
    index: dict[int, int] = field(repr=False, compare=False)

    @property
    def n(self) -> int:
        return len(self.ids)

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as ``(u, v)`` with ``u < v``, sorted by internal index pair."""
        return self._edges

    @cached_property
    def _edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v)

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.adjacency[u]
        i = bisect_left(nbrs, v)
        return i < len(nbrs) and nbrs[i] == v

    def to_internal(self, external: Iterable[int]) -> set[int]:
        """Map external ids to internal indices, skipping ids not in the graph."""
        return {self.index[x] for x in external if x in self.index}

    def to_external(self, internal: Iterable[int]) -> set[int]:
        return {self.ids[i] for i in internal}

    @classmethod
    def from_edges(cls, pairs: Iterable[Sequence[int]]) -> "Graph":
        """Build from external-id pairs; drops self-loops and parallel edges."""
        index: dict[int, int] = {}
        ids: list[int] = []
        nbrs: list[set[int]] = []
        for rec in pairs:
            a, b = int(rec[0]), int(rec[1])
            if a == b:
                continue
            for x in (a, b):
                if x not in index:
                    index[x] = len(ids)
                    ids.append(x)
                    nbrs.append(set())
            u, v = index[a], index[b]
            nbrs[u].add(v)
            nbrs[v].add(u)
        adjacency = tuple(tuple(sorted(s)) for s in nbrs)
        m = sum(len(a) for a in adjacency) // 2
        return cls(tuple(ids), adjacency, m, index)


def parse_edge_list(stream: TextIO | str, source_path: str = "") -> TemporalEdgeList:
    """Parse whitespace-separated ``u v [t]`` lines.

    Blank lines and lines starting with ``#`` are skipped. Every data line must
    have the same arity.
    """
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    records: list[tuple[int, int, int | None]] = []
    arity = None
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if len(toks) not in (2, 3):
            raise ParseError(f"expected 2 or 3 fields, got {len(toks)}", lineno)
        try:
            vals = [int(t) for t in toks]
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", lineno) from None
        if vals[0] < 0 or vals[1] < 0:
            raise ParseError("node ids must be non-negative", lineno)
        if arity is None:
            arity = len(vals)
        elif arity != len(vals):
            raise ParseError("mixed timestamped and untimestamped lines", lineno)
        records.append((vals[0], vals[1], vals[2] if len(vals) == 3 else None))
    return TemporalEdgeList(tuple(records), source_path)


def read_edge_list(path: str) -> TemporalEdgeList:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh, source_path=str(path))


def build_graph(tel: TemporalEdgeList, cutoff: int | None = None) -> Graph:
    """Graph over the records with ``t <= cutoff`` (all records if no cutoff)."""
    if cutoff is None:
        return Graph.from_edges(tel.records)
    if tel.records and not tel.timestamped:
        raise ValueError("cutoff given but edge list has no timestamps")
    return Graph.from_edges(r for r in tel.records if r[2] <= cutoff)


def snapshot_series(tel: TemporalEdgeList, window: int) -> list[tuple[int, Graph]]:
    """Cumulative snapshots at ``min_t + r * window`` for ``r = 1..floor(T / window)``."""
    if window <= 0:
        raise ValueError("window must be positive")
    if not tel.records:
        return []
    if not tel.timestamped:
        raise ValueError("snapshot_series needs timestamped records")
    times = [r[2] for r in tel.records]
    t0 = min(times)
    count = (max(times) - t0) // window
    return [(t0 + r * window, build_graph(tel, t0 + r * window)) for r in range(1, count + 1)]


def format_edge_list(g: Graph) -> str:
    """One ``u v`` line per edge in external ids, ordered by internal index pair."""
    ids = g.ids
    return "".join(f"{ids[u]} {ids[v]}\n" for u, v in g.edges())


def format_temporal_edge_list(tel: TemporalEdgeList) -> str:
    out = []
    for u, v, t in tel.records:
        out.append(f"{u} {v}\n" if t is None else f"{u} {v} {t}\n")
    return "".join(out)


@dataclass(frozen=True)
class CoreLabel:
    """Ground-truth core ids; members may be absent from any given snapshot."""

    core: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.core)

    def __len__(self) -> int:
        return len(self.core)


def parse_core(stream: TextIO | str) -> CoreLabel:
    """One external id per line; ``#`` comments and blank lines allowed."""
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    ids = set()
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            ids.add(int(line))
        except ValueError:
            raise ParseError(f"bad core id {line!r}", lineno) from None
    return CoreLabel(frozenset(ids))


def read_core(path: str) -> CoreLabel:
    with open(path, encoding="utf-8") as fh:
        return parse_core(fh)


def format_node_ids(ids: Iterable[int]) -> str:
    return "".join(f"{x}\n" for x in sorted(ids))
