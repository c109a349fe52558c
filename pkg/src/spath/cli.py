"""Command line entry point: ``spath route | sssp | check``.

Exit codes: 0 success, 1 no path (route) or engine/oracle disagreement
(check), 2 usage, parse or validation errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .engine import Mode, reconstruct_path, run
from .graph import GraphError, path_weight
from .oracle import DEFAULT_BOUND, enumerate_from
from .textio import GraphFileError, event_to_dict, format_weight, parse_graph_file, render_trace

EXIT_OK = 0
EXIT_NO_PATH = 1
EXIT_DISAGREE = 1
EXIT_INVALID = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spath", description="Shortest paths on weighted digraphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, target=True):
        p.add_argument("--graph", required=True, help="graph file")
        p.add_argument("--source", required=True)
        if target:
            p.add_argument("--target", required=True)

    route = sub.add_parser("route", help="minimal weight and path from source to target")
    common(route)
    route.add_argument("--trace", action="store_true", help="print every settling step")
    route.add_argument("--format", choices=("text", "json"), default="text")

    sssp = sub.add_parser("sssp", help="final labels for every vertex")
    common(sssp, target=False)
    sssp.add_argument("--format", choices=("text", "json"), default="text")

    check = sub.add_parser("check", help="compare the engine against brute-force enumeration")
    common(check)
    check.add_argument("--bound", type=int, default=DEFAULT_BOUND, help="oracle vertex limit")
    return parser


def _read_graph(path: str):
    with open(path, encoding="utf-8-sig") as f:
        return parse_graph_file(f.read())


def cmd_route(args, out) -> int:
    g = _read_graph(args.graph)
    result, events = run(g, args.source, args.target, Mode.TO_TARGET, trace=args.trace)
    path = reconstruct_path(result, args.target)
    weight = result.cost(args.target) if path is not None else None
    if args.format == "json":
        doc = {
            "source": result.source.name,
            "target": result.target.name,
            "weight": weight,
            "path": None if path is None else path.names,
        }
        if args.trace:
            doc["trace"] = [event_to_dict(e) for e in events]
        out.write(json.dumps(doc) + "\n")
    else:
        if args.trace:
            out.write(render_trace(events, "text"))
        out.write("no path\n" if path is None else f"{weight!r}  {path}\n")
    return EXIT_NO_PATH if path is None else EXIT_OK


def cmd_sssp(args, out) -> int:
    g = _read_graph(args.graph)
    result, _ = run(g, args.source, mode=Mode.EXHAUSTIVE)
    if args.format == "json":
        doc = {
            "source": result.source.name,
            "stop_reason": result.stop_reason.value,
            "labels": [
                {"vertex": name, "cost": lab.cost.cost, "pred": None if lab.pred is None else lab.pred.name}
                for name, lab in zip(g.names, result.labels)
            ],
        }
        out.write(json.dumps(doc) + "\n")
    else:
        for name, lab in zip(g.names, result.labels):
            pred = "-" if lab.pred is None else lab.pred.name
            out.write(f"{name} {format_weight(lab.cost.cost)} {pred}\n")
    return EXIT_OK


def check_pair(g, source, target, bound: int = DEFAULT_BOUND) -> list[str]:
    """Return a list of disagreements between engine and oracle (empty when they agree)."""
    problems = []
    result, _ = run(g, source, target, Mode.TO_TARGET)
    path = reconstruct_path(result, target)
    engine = result.cost(target) if path is not None else None
    if path is not None and path_weight(g, path) != engine:
        problems.append(f"path {path} weighs {path_weight(g, path)!r}, label says {engine!r}")
    if g.n <= bound:
        answers = enumerate_from(g, source, bound)
        oracle = answers[g.vertex(target).index].min_weight
        if oracle != engine:
            problems.append(f"engine {format_weight(engine)} vs oracle {format_weight(oracle)}")
        for u in result.settled:
            want = 0.0 if u == result.source else answers[u.index].min_weight
            if result.cost(u) != want:
                problems.append(f"settled {u} has label {result.cost(u)!r}, oracle {want!r}")
    return problems


def cmd_check(args, out) -> int:
    g = _read_graph(args.graph)
    problems = check_pair(g, args.source, args.target, args.bound)
    if g.n > args.bound:
        out.write(f"oracle skipped: {g.n} vertices > bound {args.bound}\n")
    for p in problems:
        out.write(f"MISMATCH {p}\n")
    if not problems:
        out.write("ok\n")
    return EXIT_DISAGREE if problems else EXIT_OK


COMMANDS = {"route": cmd_route, "sssp": cmd_sssp, "check": cmd_check}


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as e:
        err.write(f"{e}\n")
        return EXIT_INVALID
    except SystemExit as e:  # --help
        return int(e.code or 0)
    try:
        code = COMMANDS[args.command](args, out)
    except GraphFileError as e:
        err.write(f"{args.graph}: {e}\n")
        code = EXIT_INVALID
    except (GraphError, OSError) as e:
        err.write(f"spath: {e}\n")
        code = EXIT_INVALID
    out.flush()
    err.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
