"""Command-line front end.

Exit codes: 0 success, 1 negative decision (not interval / not realizable /
obstruction found), 2 input error, 3 search guard exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import derive, generators, graphs, intervals, points, realize
from .graphs import GraphError, GuardExceeded
from .points import ConfigError

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_GUARD = 3


def _digest(path: str) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _report(args, outcome: dict, started: float) -> str:
    rep = {
        "command": args.command,
        "inputs": {name: _digest(path) for name, path in _input_files(args)},
        "outcome": outcome,
    }
    if getattr(args, "timing", False):
        rep["timing_ms"] = round((time.monotonic() - started) * 1000, 3)
    return json.dumps(rep, indent=2, sort_keys=True) + "\n"


def _input_files(args):
    for attr in ("points_file", "graph_file"):
        path = getattr(args, attr, None)
        if path:
            yield attr, path


def _load_config(path: str) -> points.PointConfig:
    return points.parse_points_csv(Path(path).read_text())


def _load_graph(path: str) -> graphs.Graph:
    return graphs.parse_edge_list(Path(path).read_text())


def _assignment_json(A: intervals.IntervalAssignment) -> dict:
    return {
        lab: {"lo": points.format_rational(iv.lo),
              "hi": points.format_rational(iv.hi)}
        for lab, iv in A.intervals
    }


def cmd_build(args) -> int:
    config = _load_config(args.points_file)
    D = points.build_dpo(config)
    if args.dot:
        text = graphs.digraph_to_dot(D.vertices, D.arcs)
    else:
        text = "".join(f"{u} {v}\n" for u, v in D.sorted_arcs())
    _emit(text, args.out)
    return EXIT_OK


def _cmd_derivation(args, derivation) -> int:
    config = _load_config(args.points_file)
    G = derivation(points.build_dpo(config))
    text = graphs.to_dot(G) if args.dot else graphs.format_edge_list(G)
    _emit(text, args.out)
    return EXIT_OK


def cmd_intervals(args) -> int:
    config = _load_config(args.points_file)
    D = points.build_dpo(config)
    A = intervals.phylogeny_intervals(D, config)
    G = derive.phylogeny_graph(D)
    round_trip = intervals.intersection_graph(A) == G
    report = intervals.verify_separation(D, config, A)
    _emit(A.to_json() + "\n", args.out)
    summary = (f"pairs_checked={len(report.pairs)} "
               f"violations={0 if report.ok else 1} round_trip={round_trip}")
    print(summary, file=sys.stderr)
    if not round_trip or not report.ok:
        print("internal invariant failure", file=sys.stderr)
        return EXIT_NEGATIVE
    return EXIT_OK


def cmd_check_interval(args) -> int:
    started = time.monotonic()
    G = _load_graph(args.graph_file)
    A = intervals.recognize_interval(G)
    if A is None:
        outcome = {"interval": False}
        code = EXIT_NEGATIVE
    else:
        outcome = {"interval": True, "assignment": _assignment_json(A)}
        code = EXIT_OK
    _emit(_report(args, outcome, started), args.out)
    return code


def cmd_obstruct(args) -> int:
    started = time.monotonic()
    G = _load_graph(args.graph_file)
    w = realize.obstruction_theorem4(G)
    if w is None:
        outcome = {"obstruction": None}
        code = EXIT_OK
    else:
        outcome = {"obstruction": {"u": w.u, "v": w.v, "a": w.a, "b": w.b}}
        code = EXIT_NEGATIVE
    _emit(_report(args, outcome, started), args.out)
    return code


def cmd_extend(args) -> int:
    started = time.monotonic()
    G = _load_graph(args.graph_file)
    try:
        res = realize.extend_to_dpo_phylogeny(G)
    except GraphError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NEGATIVE
    outcome = {
        "extended_edges": [list(e) for e in res.extended.sorted_edges()],
        "extended_vertices": res.extended.sorted_vertices(),
        "prey_vertices": sorted(res.prey_vertices),
        "embedding": res.embedding,
    }
    _emit(_report(args, outcome, started), args.out)
    if args.points_out:
        Path(args.points_out).write_text(points.points_to_csv(res.config))
    return EXIT_OK


def cmd_pdpo(args) -> int:
    started = time.monotonic()
    G = _load_graph(args.graph_file)
    res = realize.pdpo_search(G, args.rmax)
    if res is None:
        outcome = {"found": False, "rmax": args.rmax}
        code = EXIT_NEGATIVE
    else:
        outcome = {
            "found": True,
            "extra_vertices": res.extra,
            "config": {lab: [points.format_rational(p.x1),
                             points.format_rational(p.x2)]
                       for lab, p in res.config.entries},
            "embedding": res.embedding,
        }
        code = EXIT_OK
    _emit(_report(args, outcome, started), args.out)
    return code


def cmd_realize(args) -> int:
    started = time.monotonic()
    G = _load_graph(args.graph_file)
    config = realize.realizable_bruteforce(G, args.nmax)
    if config is None:
        outcome = {"realizable": False}
        code = EXIT_NEGATIVE
    else:
        outcome = {
            "realizable": True,
            "config": {lab: [points.format_rational(p.x1),
                             points.format_rational(p.x2)]
                       for lab, p in config.entries},
        }
        code = EXIT_OK
    _emit(_report(args, outcome, started), args.out)
    if config is not None and args.points_out:
        Path(args.points_out).write_text(points.points_to_csv(config))
    return code


def cmd_gen_points(args) -> int:
    config = generators.random_point_config(args.n, seed=args.seed,
                                            force_ties=args.ties)
    _emit(points.points_to_csv(config), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="dpophylo",
        description="Dominance digraphs of planar point sets, their "
                    "competition/phylogeny graphs, and interval certificates.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, help, needs="points"):
        p = sub.add_parser(name, help=help)
        if needs == "points":
            p.add_argument("points_file")
        elif needs == "graph":
            p.add_argument("graph_file")
        p.add_argument("--out", help="write output to a file instead of stdout")
        p.add_argument("--timing", action="store_true",
                       help="include a timing_ms field in JSON reports")
        p.set_defaults(func=func)
        return p

    p = add("build", cmd_build, "dominance digraph of a points CSV")
    p.add_argument("--dot", action="store_true")
    p = add("comp", lambda a: _cmd_derivation(a, derive.competition_graph),
            "competition graph of a points CSV")
    p.add_argument("--dot", action="store_true")
    p = add("phylo", lambda a: _cmd_derivation(a, derive.phylogeny_graph),
            "phylogeny graph of a points CSV")
    p.add_argument("--dot", action="store_true")
    add("intervals", cmd_intervals,
        "interval assignment for the phylogeny graph, with separation check")
    add("check-interval", cmd_check_interval,
        "decide interval-graph-ness of an edge list", needs="graph")
    add("obstruct", cmd_obstruct,
        "search for a triangle-free edge with both endpoints of degree >= 2",
        needs="graph")
    p = add("extend", cmd_extend,
            "extend an interval graph to a realizable phylogeny graph",
            needs="graph")
    p.add_argument("--points-out", help="also write the witness points CSV")
    p = add("pdpo", cmd_pdpo,
            "least number of extra vertices making the graph realizable",
            needs="graph")
    p.add_argument("--rmax", type=int, required=True)
    p = add("realize", cmd_realize,
            "exhaustive search for a realizing point configuration",
            needs="graph")
    p.add_argument("--nmax", type=int, default=realize.GRID_GUARD)
    p.add_argument("--points-out", help="also write the witness points CSV")
    p = add("gen-points", cmd_gen_points, "seeded random points CSV",
            needs=None)
    p.add_argument("n", type=int)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--ties", action="store_true",
                   help="draw coordinates from a small pool to force ties")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, GraphError, FileNotFoundError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except GuardExceeded as e:
        print(f"guard exceeded: {e}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
