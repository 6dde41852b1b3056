"""Command-line entry point.

Exit codes: 0 success, 1 a proved claim failed verification, 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Iterable, TextIO

from .families import (
    FamilyError,
    counterexample_hatted,
    make_family_graph,
    make_knm,
    parse_descriptor,
    random_descriptor,
    sample_family_member,
)
from .graph import Graph, GraphError, GraphParseError, iter_edge_lists, render_edge_list, to_graph6
from .harness import MAX_ENUM_N, build_universe, default_universe_label, read_graph6_stream, run_suite
from .solvers import SolverLimitError, cover_number, max_2packing, min_vertex_cover, packing_number
from .theorems import THEOREMS, UnknownTheoremError, figure_classes, get_theorem

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def bound_class(beta: int, nu2: int) -> str:
    if beta > nu2 - 1:
        return "above-upper"
    lower = beta == (nu2 + 1) // 2
    upper = beta == nu2 - 1
    if lower and upper:
        return "both-extremal"
    if lower:
        return "lower-extremal"
    if upper:
        return "upper-extremal"
    return "interior"


def solve_record(g: Graph) -> dict:
    beta, nu2 = cover_number(g), packing_number(g)
    return {
        "graph6": to_graph6(g),
        "n": g.n,
        "m": g.m,
        "beta": beta,
        "nu2": nu2,
        "cover": min_vertex_cover(g).sorted(),
        "packing": [list(e) for e in max_2packing(g).sorted()],
        "class": bound_class(beta, nu2),
    }


def _read_graphs(path: str, fmt: str) -> list[Graph]:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path) as f:
            text = f.read()
    if fmt == "edgelist":
        return list(iter_edge_lists(text))
    return read_graph6_stream(text.splitlines())


def _open_out(path: str | None) -> TextIO:
    if path is None or path == "-":
        return sys.stdout
    return open(path, "w")


def _write(out: TextIO, lines: Iterable[str]) -> None:
    for line in lines:
        out.write(line + "\n")


def cmd_solve(args) -> int:
    graphs = _read_graphs(args.input, args.format)
    out = _open_out(args.output)
    try:
        for g in graphs:
            rec = solve_record(g)
            if args.json:
                out.write(json.dumps(rec, sort_keys=True) + "\n")
            else:
                out.write(
                    f"{rec['graph6']}\tn={rec['n']} m={rec['m']} beta={rec['beta']} "
                    f"nu2={rec['nu2']} class={rec['class']}\n"
                    f"\tcover={rec['cover']}\n\tpacking={rec['packing']}\n"
                )
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def _theorem_list(ids: str | None) -> list[str]:
    if not ids:
        return list(THEOREMS)
    tids = [t.strip() for t in ids.split(",") if t.strip()]
    for t in tids:
        get_theorem(t)
    return tids


def cmd_characterize(args) -> int:
    tids = _theorem_list(args.theorems)
    graphs = _read_graphs(args.input, args.format)
    status = EXIT_OK
    out = _open_out(args.output)
    try:
        for g in graphs:
            for t in tids:
                v = get_theorem(t)(g)
                if v.outcome.value == "fails":
                    status = EXIT_FAIL
                if args.json:
                    out.write(v.to_json() + "\n")
                else:
                    out.write(f"{v.graph6}\t{t}\t{v.outcome.value}\tbeta={v.beta} nu2={v.nu2}\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return status


def cmd_generate(args) -> int:
    kind = args.kind
    rest = args.params
    if kind == "knm":
        if len(rest) != 2:
            raise FamilyError("usage: generate knm N M")
        graphs = [make_knm(int(rest[0]), int(rest[1]))]
    elif kind == "hat-counterexample":
        if len(rest) != 1:
            raise FamilyError("usage: generate hat-counterexample K")
        graphs = [counterexample_hatted(int(rest[0]))]
    elif kind == "family":
        if len(rest) < 2:
            raise FamilyError("usage: generate family cycle|path K [T=..] [I=..] [extra=..] [hat]")
        record = " ".join([rest[0], f"k={rest[1]}"] + rest[2:])
        d, extra = parse_descriptor(record)
        if args.random:
            rng = random.Random(args.seed)
            graphs = [sample_family_member(d, rng)[0] for _ in range(args.random)]
        else:
            graphs = [make_family_graph(d, extra)]
    elif kind == "random-family":
        if len(rest) != 2:
            raise FamilyError("usage: generate random-family cycle|path K")
        rng = random.Random(args.seed)
        graphs = []
        for _ in range(args.random or 1):
            d = random_descriptor(rest[0], int(rest[1]), rng, hatted=args.hat)
            graphs.append(sample_family_member(d, rng)[0])
    else:
        raise FamilyError(f"unknown generator {kind!r}")
    out = _open_out(args.output)
    try:
        for g in graphs:
            out.write(render_edge_list(g) if args.format == "edgelist" else to_graph6(g) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def cmd_enumerate_check(args) -> int:
    tids = _theorem_list(args.theorems)
    if args.input:
        universe = _read_graphs(args.input, "graph6")
        label = f"graph6 stream ({args.input})"
    else:
        if not 1 <= args.max_n <= MAX_ENUM_N:
            raise GraphError(f"--max-n must be between 1 and {MAX_ENUM_N}")
        universe = build_universe(args.max_n, raw=args.raw)
        label = default_universe_label(args.max_n, args.raw)
    report = run_suite(universe, tids, workers=args.workers, label=label)
    if args.output:
        with open(args.output, "w") as f:
            f.write(report.render())
    if args.json:
        sys.stdout.write(json.dumps({"summary": report.summary()}, sort_keys=True) + "\n")
    else:
        sys.stdout.write(report.render_table())
        if report.falsified:
            sys.stdout.write(f"PAPER-CLAIM-FALSIFIED: {len(report.falsified)} counterexamples "
                             "to unproved claims\n")
        for v in report.proved_failures[:20]:
            sys.stdout.write(f"FAIL {v.theorem_id} {v.graph6} beta={v.beta} nu2={v.nu2}\n")
    print(f"wall time {report.wall_time:.1f}s", file=sys.stderr)
    return EXIT_FAIL if report.proved_failures else EXIT_OK


def cmd_figures(args) -> int:
    classes = figure_classes(args.max_n)
    out = _open_out(args.output)
    try:
        for name, graphs in classes.items():
            if args.json:
                for g in graphs:
                    out.write(json.dumps({"class": name, "graph6": to_graph6(g), "n": g.n,
                                          "edges": [list(e) for e in g.edge_list]}) + "\n")
            else:
                out.write(f"# {name}: {len(graphs)} graphs\n")
                _write(out, (to_graph6(g) for g in graphs))
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="covpack", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def io_flags(sp, with_input=True):
        if with_input:
            sp.add_argument("input", nargs="?", default="-", help="input path or - for stdin")
        sp.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
        sp.add_argument("--json", action="store_true")
        sp.add_argument("--output", "-o", default=None)

    sp = sub.add_parser("solve", help="beta, nu_2 and certificates per input graph")
    io_flags(sp)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("characterize", help="run the theorem checks on input graphs")
    io_flags(sp)
    sp.add_argument("--theorems", default=None)
    sp.set_defaults(func=cmd_characterize)

    sp = sub.add_parser("generate", help="emit K_n^m, family members or the hatted counterexample")
    sp.add_argument("kind", choices=["knm", "family", "random-family", "hat-counterexample"])
    sp.add_argument("params", nargs="*")
    sp.add_argument("--random", type=int, default=0, help="number of random members")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--hat", action="store_true", help="random-family: require nu_2 = k")
    io_flags(sp, with_input=False)
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("enumerate-check", help="exhaustive verification over small graphs")
    sp.add_argument("--max-n", type=int, default=6)
    sp.add_argument("--theorems", default=None)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--raw", action="store_true", help="skip the max degree >= 3 filter")
    sp.add_argument("--input", default=None, help="graph6 stream instead of enumeration")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--output", "-o", default=None, help="write the full JSONL report here")
    sp.set_defaults(func=cmd_enumerate_check)

    sp = sub.add_parser("figures", help="small (nu_2, beta) = (3, 2) and maximal (4, 3) graphs")
    sp.add_argument("--max-n", type=int, default=7)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--output", "-o", default=None)
    sp.set_defaults(func=cmd_figures)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "workers", 1) < 1:
        parser.error("--workers must be >= 1")
    try:
        return args.func(args)
    except GraphParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UnknownTheoremError, FamilyError, GraphError, SolverLimitError, ValueError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
