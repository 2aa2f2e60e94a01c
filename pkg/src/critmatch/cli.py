"""Command-line front end: check, gen, census, verify and convert.

Machine-readable JSON goes to stdout and human diagnostics to stderr. Exit
status is 0 on success, 1 when a requested property is false or a
counterexample turns up, and 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .census import PREDICATES, REGISTRY, run_census, verify_many
from .enumerate import EnumerationBoundError
from .families import DescriptorError, generate, parse_descriptor
from .graph import Graph6Error, emit_edge_list, emit_graph6, read_graphs
from .properties import FLAG_NAMES, property_report

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    """Bad input detected after argument parsing."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse exits with 2 as well, but keep it explicit
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _read_input(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    if os.path.exists(arg):
        with open(arg, encoding="ascii") as fh:
            return fh.read()
    # a literal graph6 string on the command line
    return arg


def _emit(obj: object) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")


def _cmd_check(args: argparse.Namespace) -> int:
    requested = [name for name in FLAG_NAMES if getattr(args, name)]
    flags = None if args.all or not requested else requested
    graphs = read_graphs(_read_input(args.input))
    if not graphs:
        raise UsageError("no graph in input")
    status = EXIT_OK
    for g in graphs:
        rep = property_report(g, flags)
        _emit(rep.to_dict())
        if flags is not None and not all(rep.flags[f] for f in flags):
            status = EXIT_FALSE
    return status


def _cmd_gen(args: argparse.Namespace) -> int:
    inst = generate(parse_descriptor(args.descriptor))
    _emit(
        {
            "descriptor": str(inst.descriptor),
            "graph6": emit_graph6(inst.graph),
            "labels": {k: list(v) for k, v in inst.labels.items()},
            "n": inst.graph.n,
        }
    )
    return EXIT_OK


def _split_preds(text: str) -> list[str]:
    preds = [p.strip().replace("-", "_") for p in text.split(",") if p.strip()]
    if not preds:
        raise UsageError("--pred needs at least one predicate")
    return preds


def _cmd_census(args: argparse.Namespace) -> int:
    preds = _split_preds(args.pred)
    source = None
    if args.input is not None:
        source = [emit_graph6(g) for g in read_graphs(_read_input(args.input))]
        source = [s for s in source if s and ord(s[0]) - 63 == args.n]
    records = run_census(args.n, preds, workers=args.workers, source=source)
    for rec in records:
        sys.stdout.write(rec.to_json() + "\n")
    print(f"census n={args.n} pred={','.join(preds)}: {len(records)} graphs", file=sys.stderr)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.list:
        _emit({tid: {"claim": th.claim, "conjecture_grade": th.conjecture_grade} for tid, th in REGISTRY.items()})
        return EXIT_OK
    ids = list(REGISTRY) if args.all else args.theorem
    if not ids:
        raise UsageError("name at least one theorem id, or pass --all or --list")
    unknown = [t for t in ids if t not in REGISTRY]
    if unknown:
        raise UsageError(f"unregistered theorem id(s): {', '.join(unknown)}")
    reports = verify_many(ids, args.n, workers=args.workers, cap=args.cap)
    failed = False
    for tid, rep in reports.items():
        failed |= not rep.passed
        note = " (conjecture-grade)" if rep.conjecture_grade else ""
        verdict = "pass" if rep.passed else f"FAIL ({rep.total_counterexamples} counterexamples)"
        print(f"{tid}: {verdict}{note}, {rep.scanned} scanned, {rep.elapsed:.1f}s", file=sys.stderr)
        if rep.cap_hit:
            print(f"{tid}: counterexample list capped at {rep.cap}", file=sys.stderr)
    if len(reports) == 1:
        _emit(next(iter(reports.values())).to_dict())
    else:
        _emit({"n_max": args.n, "reports": [r.to_dict() for r in reports.values()]})
    return EXIT_FALSE if failed else EXIT_OK


def _cmd_convert(args: argparse.Namespace) -> int:
    graphs = read_graphs(_read_input(args.input))
    if args.to == "graph6":
        sys.stdout.write("".join(emit_graph6(g) + "\n" for g in graphs))
    else:
        sys.stdout.write("".join(emit_edge_list(g) for g in graphs))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="critmatch", description="Equimatchable and edge-critical graph toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="property report for one or more graphs")
    p.add_argument("input", help="graph6 string, file of graph6 lines or edge lists, or - for stdin")
    p.add_argument("--all", action="store_true", help="compute every flag (the default when none is named)")
    for name in FLAG_NAMES:
        p.add_argument("--" + name.replace("_", "-"), dest=name, action="store_true")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("gen", help="build a family instance from a descriptor")
    p.add_argument("descriptor", help='e.g. "typeI p=1 q=1 b1=2" or "famC r=2"')
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("census", help="connected graphs of one order satisfying predicates")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pred", required=True, help=f"comma list from: {', '.join(PREDICATES)}")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--input", help="read graph6 lines from this file (or -) instead of enumerating")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("verify", help="re-check registered claims over the census")
    p.add_argument("theorem", nargs="*")
    p.add_argument("--n", type=int, default=8, help="largest order scanned (default 8)")
    p.add_argument("--all", action="store_true", help="every registered claim")
    p.add_argument("--list", action="store_true", help="print the registry and exit")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--cap", type=int, default=25, help="counterexamples listed per claim")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("convert", help="translate between graph6 and edge lists")
    p.add_argument("input")
    p.add_argument("--to", choices=("graph6", "edgelist"), required=True)
    p.set_defaults(func=_cmd_convert)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "workers", 1) < 1:
        print("critmatch: error: --workers must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, Graph6Error, DescriptorError, EnumerationBoundError, KeyError, ValueError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"critmatch {args.command}: error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
