"""Command-line front end.

Exit codes: 0 success, 1 usage or parameter error, 2 I/O or format
error, 3 an iterative method did not converge (outputs are still
written, flagged ``converged: false``).

Unless ``--out`` is given, outputs go to ``$FANDS_OUTPUT_DIR`` (default:
the current directory).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
import warnings
from pathlib import Path

from .baselines import compare_rankings, rank_by_count, rank_by_percentage, rank_hits, RankingResult
from .errors import ConvergenceWarning, FandsError, FormatError, ParameterError
from .export import to_dot, to_force_json
from .flow import (
    FlowParams,
    convergence_metadata,
    read_energy_csv,
    relative_energy,
    run_flow,
    write_energy_csv,
)
from .incograph import IncoGraph, build_graph, build_pairs, pipeline_stats
from .ingest import parse_fnc, parse_stance_table, write_stance_table
from .synth import make_preset, preset_corpus

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_NONCONVERGED = 0, 1, 2, 3
METHODS = ("fands", "count", "percentage", "hits")
OUTPUT_DIR_ENV = "FANDS_OUTPUT_DIR"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _default_out(name: str) -> Path:
    return Path(os.environ.get(OUTPUT_DIR_ENV, ".")) / name


def _write(path: Path, text: str) -> None:
    """Write via a temporary file so a failure never leaves partial output."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def _sidecar(path: Path) -> Path:
    path = Path(path)
    return path.with_name(path.stem + ".convergence.json")


def _load_corpus(args):
    if getattr(args, "table", None):
        return parse_stance_table(args.table)
    if getattr(args, "stances", None):
        return parse_fnc(args.stances, args.bodies or None)
    return None


def _load_graph(path) -> IncoGraph:
    return IncoGraph.from_json(Path(path).read_text(encoding="utf-8"))


def _flow_params(args) -> FlowParams:
    return FlowParams(p=args.p, tol=args.tol, max_iters=args.max_iters, initial_energy=args.init)


def _add_corpus_args(p, required=False):
    group = p.add_mutually_exclusive_group(required=required)
    group.add_argument("--table", help="generic stance table CSV (topic_id,news_id,stance)")
    group.add_argument("--stances", action="append", help="FNC-1 stances CSV (repeatable, train first)")
    p.add_argument("--bodies", action="append", help="FNC-1 bodies CSV (repeatable)")


def _add_flow_args(p):
    d = FlowParams()
    p.add_argument("--p", type=float, default=d.p, help="fraction of energy emitted per step")
    p.add_argument("--tol", type=float, default=d.tol, help="relative L1 convergence threshold")
    p.add_argument("--max-iters", type=int, default=d.max_iters)
    p.add_argument("--init", type=float, default=d.initial_energy, help="initial energy per node")
    p.add_argument("--hits-tol", type=float, default=1e-12)
    p.add_argument("--hits-max-iters", type=int, default=10_000)


def _rank(method, graph, corpus, args):
    if method == "fands":
        state = run_flow(graph, _flow_params(args))
        result = RankingResult(
            "fands", graph.nodes, relative_energy(state),
            converged=state.converged, iterations=state.iteration, residual=state.residual,
        )
        return result, state
    if method == "count":
        return rank_by_count(graph), None
    if method == "percentage":
        if corpus is None:
            raise UsageError("method 'percentage' needs the stance data (--table or --stances)")
        return rank_by_percentage(corpus, nodes=graph.nodes), None
    if method == "hits":
        return rank_hits(graph, tol=args.hits_tol, max_iters=args.hits_max_iters), None
    raise UsageError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")


def cmd_build(args) -> int:
    corpus = _load_corpus(args)
    pairs = build_pairs(corpus)
    graph = build_graph(pairs)
    summary = pipeline_stats(corpus, pairs, graph)
    _write(args.out or _default_out("graph.json"), graph.to_json())
    print(json.dumps(summary, indent=2))
    return EXIT_OK


def cmd_rank(args) -> int:
    _flow_params(args)
    graph = _load_graph(args.graph)
    corpus = _load_corpus(args)
    result, state = _rank(args.method, graph, corpus, args)
    out = Path(args.out or _default_out(f"rankings_{args.method}.csv"))
    node_ids = {n: i + 1 for i, n in enumerate(graph.nodes)}
    _write(out, result.to_csv(node_ids))
    if args.method in ("fands", "hits"):
        meta = {"method": args.method, "iterations": result.iterations,
                "residual": float(result.residual), "converged": bool(result.converged)}
        if state is not None:
            meta.update(convergence_metadata(state))
        _write(_sidecar(out), json.dumps(meta, indent=2) + "\n")
    if state is not None and args.energies_out:
        write_energy_csv(graph, state, args.energies_out)
    return EXIT_OK if result.converged else EXIT_NONCONVERGED


def cmd_synth(args) -> int:
    corpus = preset_corpus(args.preset, k=args.k, s=args.s, t=args.t)
    graph = make_preset(args.preset, k=args.k, s=args.s, t=args.t)
    _write(args.out or _default_out(f"{args.preset}.json"), graph.to_json())
    if args.table_out:
        write_stance_table(corpus, args.table_out)
    return EXIT_OK


def cmd_compare(args) -> int:
    _flow_params(args)
    graph = _load_graph(args.graph)
    corpus = _load_corpus(args)
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    if not methods:
        raise UsageError("--methods is empty")
    if len(set(methods)) != len(methods):
        raise UsageError("--methods lists a method more than once")
    results, converged = [], True
    for m in methods:
        r, _ = _rank(m, graph, corpus, args)
        converged &= r.converged
        results.append(r)
    table = compare_rankings(results, args.top)
    out = Path(args.out or _default_out("comparison.csv"))
    _write(out, table.to_json() if out.suffix.lower() == ".json" else table.to_csv())
    print(json.dumps([{"a": a, "b": b, "overlap": n} for (a, b), n in table.overlap.items()]))
    return EXIT_OK if converged else EXIT_NONCONVERGED


def cmd_export(args) -> int:
    graph = _load_graph(args.graph)
    state = read_energy_csv(args.energies, graph) if args.energies else None
    if args.format == "dot":
        text = to_dot(graph, state)
    else:
        if state is None and graph.n_edges:
            state = run_flow(graph)
        if state is None:
            text = json.dumps({"nodes": [], "links": []}, indent=2) + "\n"
        else:
            text = to_force_json(graph, state)
    if args.out:
        _write(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fands", description="Inconsistency-graph energy flow ranking")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("build", help="stance data -> inconsistency graph JSON")
    _add_corpus_args(p, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("rank", help="rank graph nodes with one method")
    p.add_argument("--graph", required=True)
    p.add_argument("--method", required=True, choices=METHODS)
    _add_corpus_args(p)
    _add_flow_args(p)
    p.add_argument("--out")
    p.add_argument("--energies-out", help="also write the converged energies CSV (fands only)")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("synth", help="write a synthetic preset graph")
    p.add_argument("--preset", required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--out")
    p.add_argument("--table-out", help="also write the preset's stance table CSV")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("compare", help="side-by-side top-k of several methods")
    p.add_argument("--graph", required=True)
    p.add_argument("--methods", default="fands,count,percentage,hits")
    p.add_argument("--top", type=int, default=10)
    _add_corpus_args(p)
    _add_flow_args(p)
    p.add_argument("--out", help="CSV, or JSON when the name ends in .json")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("export", help="DOT or force-layout JSON export")
    p.add_argument("--graph", required=True)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--energies", help="energies CSV written by 'rank --energies-out'")
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ConvergenceWarning)
            return args.func(args)
    except (UsageError, ParameterError) as exc:
        print(f"fands: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FormatError, OSError) as exc:
        print(f"fands: error: {exc}", file=sys.stderr)
        return EXIT_IO
    except FandsError as exc:
        print(f"fands: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
