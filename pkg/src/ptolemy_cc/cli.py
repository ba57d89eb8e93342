"""Command line interface.

Exit codes: 0 success, 1 check failed (closure violation, oracle
mismatch, failing fixture), 2 unreadable input, 3 size guard refused.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import kernels
from .ccmap import RhoCalculator
from .diagram import (ClosureViolation, DiagramFormatError, GuardError,
                      dump_diagram, enumerate_ptolemy, find_violation,
                      parse_diagram)
from .fixtures import run_fixtures
from .frieze import build_band, render
from .oracle import count_subfunctors
from .polygon import PolygonError, as_diagonal

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_GUARD = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read_input(path: str) -> tuple[str, str]:
    if path == "-":
        return "<stdin>", sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as f:
            return path, f.read()
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from None


def _load(args):
    name, text = _read_input(args.input)
    try:
        return parse_diagram(text)
    except DiagramFormatError as e:
        where = f"{name}:{e.lineno}:{e.colno}" if e.lineno is not None else name
        raise InputError(f"{where}: {e}") from None


def _calculator(args) -> RhoCalculator:
    d = _load(args)
    return RhoCalculator(d)


def cmd_validate(args, out) -> int:
    d = _load(args)
    v = find_violation(d)
    if v is None:
        print("Ok", file=out)
        return EXIT_OK
    print(f"ClosureViolation: {v}", file=out)
    return EXIT_FAIL


def cmd_rho(args, out) -> int:
    calc = _calculator(args)
    try:
        a, b = (int(x) for x in args.diagonal.split(","))
        m = as_diagonal((a, b), calc.N)
    except (ValueError, PolygonError) as e:
        raise InputError(f"--diagonal {args.diagonal}: {e}") from None
    print(calc.rho(m), file=out)
    return EXIT_OK


def cmd_table(args, out) -> int:
    table = _calculator(args).table()
    if args.format == "json":
        json.dump({"N": table.N, "values": [[m.a, m.b, v] for m, v in table.items()]},
                  out, sort_keys=True)
        out.write("\n")
    else:
        sep = "," if args.format == "csv" else " "
        if args.format == "csv":
            print("a,b,value", file=out)
        for m, v in table.items():
            print(f"{m.a},{m.b}{sep}{v}", file=out)
    return EXIT_OK


def cmd_frieze(args, out) -> int:
    if args.periods < 1:
        raise InputError("--periods must be >= 1")
    band = build_band(_calculator(args).table())
    out.write(render(band, args.format, args.periods))
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    calc = _calculator(args)
    mismatches = 0
    for m, v in calc.table().items():
        o = count_subfunctors(m, calc.diagram)
        flag = "" if o == v else " MISMATCH"
        mismatches += o != v
        print(f"{m.a},{m.b} {v} {o}{flag}", file=out)
    return EXIT_FAIL if mismatches else EXIT_OK


def cmd_examples(args, out) -> int:
    failed = 0
    for name, label, ok in run_fixtures():
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'} {name}: {label}", file=out)
    print(f"{'all fixtures pass' if not failed else f'{failed} check(s) failed'}"
          f" [{kernels.BACKEND} kernels]", file=out)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_enumerate(args, out) -> int:
    for d in enumerate_ptolemy(args.n):
        print(dump_diagram(d), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ptolemy-cc",
        description="Caldero-Chapoton values and friezes of Ptolemy diagrams.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_input(name, help, **kw):
        sp = sub.add_parser(name, help=help, **kw)
        sp.add_argument("--input", required=True, metavar="PATH",
                        help='diagram JSON file, or "-" for stdin')
        return sp

    with_input("validate", "check the Ptolemy condition").set_defaults(func=cmd_validate)
    sp = with_input("rho", "value on one diagonal")
    sp.add_argument("--diagonal", required=True, metavar="a,b")
    sp.set_defaults(func=cmd_rho)
    sp = with_input("table", "values on every diagonal")
    sp.add_argument("--format", choices=("text", "json", "csv"), default="text")
    sp.set_defaults(func=cmd_table)
    sp = with_input("frieze", "frieze band with diamond determinants")
    sp.add_argument("--format", choices=("text", "json", "csv"), default="text")
    sp.add_argument("--periods", type=int, default=1, metavar="K")
    sp.set_defaults(func=cmd_frieze)
    with_input("oracle", "compare recursion with subfunctor counting").set_defaults(func=cmd_oracle)
    sub.add_parser("examples", help="run the bundled worked examples").set_defaults(func=cmd_examples)
    sp = sub.add_parser("enumerate", help="list every Ptolemy diagram of an N-gon")
    sp.add_argument("--n", type=int, required=True, metavar="N")
    sp.set_defaults(func=cmd_enumerate)
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except ClosureViolation as e:
        print(f"ClosureViolation: {e}", file=sys.stderr)
        return EXIT_FAIL
    except GuardError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_GUARD
    except PolygonError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
