"""Command-line front end.

Exit status is 0 when everything passed, 1 when a check or comparison failed,
and 2 for usage, parse or type errors.
"""

from __future__ import annotations

import argparse
import sys

from .core import OneCell, TwoCell, max_entry_error
from .dsl import DSLError, evaluate_text
from .linalg import DEFAULT_TOL
from .serialize import SerializationError, deserialize, serialize
from .suites import CHECKS, run_check

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="twohilb", description="Verify protocols in the 2-category 2Hilb.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", help="run a named verification")
    c.add_argument("name", choices=CHECKS + ("all",))
    c.add_argument("--tolerance", type=float, default=DEFAULT_TOL)
    c.add_argument("--json", action="store_true", help="print one JSON report per line")
    c.add_argument("--n", type=int, default=None,
                   help="size parameter (outcomes, dimension or sample count)")

    e = sub.add_parser("eval", help="evaluate an expression and print the cell as JSON")
    e.add_argument("file", help="file containing the expression, or - for stdin")

    d = sub.add_parser("diff", help="compare two serialized cells")
    d.add_argument("a")
    d.add_argument("b")
    d.add_argument("--tolerance", type=float, default=DEFAULT_TOL)
    return p


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _format(r) -> str:
    status = "PASS" if r.passed else "FAIL"
    line = f"{status}  {r.name:<40} max_entry_error={r.max_entry_error:.3e}"
    if r.fitted_scalar is not None:
        s = r.fitted_scalar
        line += f"  fitted_scalar={s.real:.12g}{s.imag:+.3g}i"
    return line


def cmd_check(args) -> int:
    if args.tolerance <= 0:
        raise ValueError("tolerance must be positive")
    reports = run_check(args.name, args.n, args.tolerance)
    for r in reports:
        print(serialize(r) if args.json else _format(r))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_eval(args) -> int:
    text = _read(args.file)
    print(serialize(evaluate_text(text.strip())))
    return EXIT_OK


def cmd_diff(args) -> int:
    a, b = deserialize(_read(args.a)), deserialize(_read(args.b))
    if isinstance(a, TwoCell) and isinstance(b, TwoCell):
        err = max_entry_error(a, b)
    elif isinstance(a, OneCell) and isinstance(b, OneCell):
        err = 0.0 if a == b else float("inf")
    else:
        raise ValueError("diff compares two one-cells or two two-cells")
    same = err <= args.tolerance
    print(f"{'SAME' if same else 'DIFFERENT'}  max_entry_error={err:.3e}")
    return EXIT_OK if same else EXIT_FAIL


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"check": cmd_check, "eval": cmd_eval, "diff": cmd_diff}[args.command]
    try:
        return handler(args)
    except (DSLError, SerializationError, ValueError, KeyError, OSError) as exc:
        print(f"twohilb: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
