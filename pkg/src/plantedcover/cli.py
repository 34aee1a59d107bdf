"""Command-line entry point: ``plantedcover {recover,bounds,eval,gen-sbm,oracle}``."""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from pathlib import Path

from .cover import approx_kstar_bounds
from .evaluate import rows_to_csv, temporal_sweep
from .graph import (
    SECONDS_PER_DAY,
    ParseError,
    build_graph,
    format_edge_list,
    format_node_ids,
    format_temporal_edge_list,
    read_core,
    read_edge_list,
)
from .oracle import DEFAULT_EXACT_BUDGET, DEFAULT_UNION_BUDGET, BudgetExceeded, exact_min_vertex_cover, union_minimal_covers_upto
from .rank import DEFAULT_COVERS, METHODS, rank_nodes
from .synth import SbmParams, gen_core_fringe_sbm, stamp_edges

THREADS_ENV = "PLANTEDCOVER_THREADS"


class CliError(Exception):
    pass


def write_atomic(path: str | os.PathLike, text: str) -> None:
    """Write via a temp file in the target directory, then rename over ``path``."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(text: str, out: str | None) -> None:
    if out:
        write_atomic(out, text)
    else:
        sys.stdout.write(text)


def _load_graph(path: str):
    try:
        return build_graph(read_edge_list(path))
    except OSError as e:
        raise CliError(f"cannot read graph file {path}: {e.strerror}") from None
    except ParseError as e:
        raise CliError(f"{path}: {e}") from None


def cmd_recover(args) -> int:
    g = _load_graph(args.graph)
    r = rank_nodes(g, args.method, args.covers, args.seed)
    _emit(r.to_csv(), args.out)
    summary = f"n={g.n} m={g.m}"
    if args.method == "umvc":
        summary += f" union={int(r.in_union.sum())}"
    if args.method == "be" and not r.converged:
        summary += " converged=false"
    print(summary, file=sys.stderr if not args.out else sys.stdout)
    return 0


def cmd_bounds(args) -> int:
    g = _load_graph(args.graph)
    report = approx_kstar_bounds(g, args.runs, args.seed, args.k)
    _emit(report.to_text(), args.out)
    return 0


def _parse_methods(text: str) -> list[str]:
    methods = [m.strip() for m in text.split(",") if m.strip()]
    bad = [m for m in methods if m not in METHODS]
    if bad or not methods:
        raise CliError(f"unknown method(s) {bad}; choose from {','.join(METHODS)}")
    return methods


def cmd_eval(args) -> int:
    methods = _parse_methods(args.methods)
    try:
        tel = read_edge_list(args.graph)
    except OSError as e:
        raise CliError(f"cannot read graph file {args.graph}: {e.strerror}") from None
    except ParseError as e:
        raise CliError(f"{args.graph}: {e}") from None
    if tel.records and not tel.timestamped:
        raise CliError("eval needs a timestamped edge list (u v t)")
    try:
        core = read_core(args.core)
    except OSError as e:
        raise CliError(f"cannot read core file {args.core}: {e.strerror}") from None
    except ParseError as e:
        raise CliError(f"{args.core}: {e}") from None
    if not core.core:
        raise CliError("core file is empty")
    window = args.window * SECONDS_PER_DAY
    rows = temporal_sweep(tel, core, methods, window, args.covers, args.seed, workers=args.threads)
    _emit(rows_to_csv(rows), args.out)
    return 0


def cmd_gen_sbm(args) -> int:
    try:
        params = SbmParams(args.k, args.n, args.p, args.q, args.seed)
    except ValueError as e:
        raise CliError(str(e)) from None
    g, core = gen_core_fringe_sbm(params)
    if args.span_days is not None:
        text = format_temporal_edge_list(stamp_edges(g, args.span_days * SECONDS_PER_DAY, args.seed))
    else:
        text = format_edge_list(g)
    cc = sum(1 for u, v in g.edges() if g.ids[u] < args.k and g.ids[v] < args.k)
    write_atomic(args.out, text)
    write_atomic(args.core_out, format_node_ids(core.core))
    print(f"edges={g.m} core_core={cc} core_fringe={g.m - cc} nodes={g.n}")
    return 0


def cmd_oracle(args) -> int:
    g = _load_graph(args.graph)
    try:
        res = exact_min_vertex_cover(g, args.budget)
        lines = [f"n={g.n}", f"m={g.m}", f"kstar={res.kstar}", f"alpha={res.alpha}"]
        lines.append("witness=" + " ".join(str(x) for x in sorted(g.to_external(res.witness))))
        if args.union_k is not None:
            union = union_minimal_covers_upto(g, args.union_k, args.union_budget)
            lines.append(f"union_k={args.union_k}")
            lines.append(f"union_size={len(union)}")
            lines.append("union=" + " ".join(str(x) for x in sorted(g.to_external(union))))
    except BudgetExceeded as e:
        raise CliError(f"refusing exact computation: {e}") from None
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="plantedcover", description="Planted vertex cover recovery tools.")
    parser.add_argument("--threads", type=int, default=_default_threads(),
                        help=f"worker processes (default from ${THREADS_ENV}, else 1)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recover", help="rank nodes by likelihood of core membership")
    p.add_argument("--graph", required=True)
    p.add_argument("--method", choices=METHODS, default="umvc")
    p.add_argument("--covers", type=int, default=DEFAULT_COVERS)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_recover)

    p = sub.add_parser("bounds", help="bracket k* and bound the union of minimal covers")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--runs", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("eval", help="evaluate methods on cumulative temporal snapshots")
    p.add_argument("--graph", required=True)
    p.add_argument("--core", required=True)
    p.add_argument("--methods", default=",".join(METHODS))
    p.add_argument("--window", type=int, default=10, help="snapshot window in days")
    p.add_argument("--covers", type=int, default=DEFAULT_COVERS)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("gen-sbm", help="sample a core-fringe stochastic block model")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--q", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--span-days", type=int, help="attach timestamps spread over this many days")
    p.add_argument("--out", default="sbm_edges.txt")
    p.add_argument("--core-out", default="sbm_core.txt")
    p.set_defaults(func=cmd_gen_sbm)

    p = sub.add_parser("oracle", help="exact minimum cover and union of minimal covers (small graphs)")
    p.add_argument("--graph", required=True)
    p.add_argument("--union-k", type=int)
    p.add_argument("--budget", type=int, default=DEFAULT_EXACT_BUDGET)
    p.add_argument("--union-budget", type=int, default=DEFAULT_UNION_BUDGET)
    p.add_argument("--out")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "recover" and args.covers < 1:
        parser.error("--covers must be >= 1")
    if args.command == "gen-sbm" and args.k > args.n:
        parser.error(f"--k ({args.k}) must not exceed --n ({args.n})")
    try:
        return args.func(args)
    except CliError as e:
        print(f"plantedcover: error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
