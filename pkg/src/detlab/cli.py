"""Command-line front end.

Exit codes: 0 success, 2 parse error, 3 non-square input, 4 singular
system, 5 property violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from .determinant import DetMode, det
from .errors import DivisionByZero, NotSquare, ParseError, SingularSystem
from .field import FieldDescriptor
from .linalg import Vector, VecTuple, parse_matrix
from .main_equation import (
    PROPERTIES,
    classification,
    parse_functional,
    verify_antisymmetry,
    verify_main_equation,
    verify_multilinearity,
)
from .solver import cramer_solve, is_linearly_independent, parse_system, rank, spans_ambient

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_SHAPE = 3
EXIT_SINGULAR = 4
EXIT_VIOLATION = 5

_ALGORITHMS = {
    "cofactor": DetMode.COFACTOR,
    "elimination": DetMode.ELIMINATION,
    "crosscheck": DetMode.CROSSCHECK,
}


def _field_arg(text):
    try:
        return FieldDescriptor.from_name(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def _seed_arg(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= n < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return n


def _fmt_vec(v: Vector) -> str:
    return "(" + ", ".join(map(str, v)) + ")"


def _fmt_value(x):
    if isinstance(x, Vector):
        return _fmt_vec(x)
    if isinstance(x, VecTuple):
        return "(" + ", ".join(_fmt_vec(v) for v in x) + ")"
    if isinstance(x, tuple):
        return "(" + ", ".join(_fmt_value(y) for y in x) + ")"
    return str(x)


def _json_value(x):
    if isinstance(x, Vector):
        return [str(a) for a in x]
    if isinstance(x, (VecTuple, tuple, list)):
        return [_json_value(y) for y in x]
    if isinstance(x, int):
        return x
    return str(x)


class Output:
    def __init__(self, machine: bool, stream=None):
        self.machine = machine
        self.stream = stream or sys.stdout

    def record(self, record: dict, lines: list[str]):
        if self.machine:
            self.stream.write(json.dumps(record, sort_keys=True) + "\n")
        else:
            for line in lines:
                self.stream.write(line + "\n")


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _error(msg: str, code: int) -> int:
    sys.stderr.write(f"detlab: {msg}\n")
    return code


def cmd_det(args, out: Output) -> int:
    try:
        a = parse_matrix(_read_input(args.input), args.field)
    except (ParseError, DivisionByZero) as exc:
        return _error(str(exc), EXIT_PARSE)
    if not a.is_square:
        return _error(f"{a.nrows}x{a.ncols} matrix is not square", EXIT_SHAPE)
    result = det(a, args.algorithm)
    record = {
        "command": "det",
        "field": args.field.name,
        "algorithm": result.algorithm.value,
        "det": str(result.value),
    }
    lines = [f"det = {result.value}", f"algorithm = {result.algorithm.value}"]
    if result.trace is not None:
        diag = [str(x) for x in result.trace.diagonal_entries]
        record["swaps"] = result.trace.swap_count
        record["diagonal"] = diag
        lines.append(f"swaps m = {result.trace.swap_count}")
        lines.append(f"diagonal = {' '.join(diag)}")
    out.record(record, lines)
    return EXIT_OK


def cmd_solve(args, out: Output) -> int:
    try:
        system = parse_system(_read_input(args.input), args.field)
    except (ParseError, DivisionByZero) as exc:
        return _error(str(exc), EXIT_PARSE)
    except NotSquare as exc:
        return _error(str(exc), EXIT_SHAPE)
    try:
        sol = cramer_solve(system, args.algorithm)
    except SingularSystem as exc:
        out.record(
            {
                "command": "solve",
                "field": args.field.name,
                "singular": True,
                "rank": exc.rank,
                "certificate": _json_value(exc.certificate),
            },
            [
                f"singular system: rank {exc.rank}",
                f"certificate = {_fmt_value(exc.certificate)}",
            ],
        )
        return EXIT_SINGULAR
    out.record(
        {
            "command": "solve",
            "field": args.field.name,
            "singular": False,
            "x": _json_value(sol.values),
            "numerators": _json_value(sol.per_coordinate_determinants),
            "denominator": str(sol.base_determinant),
        },
        [
            f"x = {_fmt_value(sol.values)}",
            f"numerators = {_fmt_value(sol.per_coordinate_determinants)}",
            f"denominator = {sol.base_determinant}",
        ],
    )
    return EXIT_OK


_VERIFIERS = {
    "main_equation": verify_main_equation,
    "multilinearity": verify_multilinearity,
    "antisymmetry": verify_antisymmetry,
}


def cmd_verify(args, out: Output) -> int:
    try:
        f = parse_functional(args.functional, args.field)
    except (ParseError, DivisionByZero) as exc:
        return _error(str(exc), EXIT_PARSE)
    expected = classification(f)
    status = EXIT_OK
    lines = [
        f"functional = {f.descriptor()}",
        f"field = {args.field.name}",
        f"seed = {args.seed}, trials = {args.trials}",
    ]
    results = []
    for prop in PROPERTIES:
        report = _VERIFIERS[prop](f, args.trials, args.seed)
        want = expected[prop]
        if report.skipped:
            verdict, note = "skip", ""
        else:
            verdict = "pass" if report.passed else "FAIL"
            if want is None:
                note = " (unclassified)"
            elif want == report.passed:
                note = " (expected)"
            else:
                note = " (UNEXPECTED)"
                status = EXIT_VIOLATION
        line = f"{prop}: {verdict}{note}, {report.trials_run} trials"
        entry = {
            "property": prop,
            "passed": report.passed,
            "expected": want,
            "trials_run": report.trials_run,
        }
        if report.witness is not None:
            w = report.witness
            inputs = ", ".join(f"{k} = {_fmt_value(v)}" for k, v in w.inputs.items())
            line += f"\n  witness at trial {w.trial}: {inputs}; residual = {_fmt_value(w.residual)}"
            entry["witness"] = {
                "trial": w.trial,
                "inputs": {k: _json_value(v) for k, v in w.inputs.items()},
                "residual": _json_value(w.residual),
            }
        lines.append(line)
        results.append(entry)
    lines.append("result: " + ("ok" if status == EXIT_OK else "property violation"))
    out.record(
        {
            "command": "verify",
            "field": args.field.name,
            "functional": f.descriptor(),
            "seed": args.seed,
            "trials": args.trials,
            "properties": results,
            "ok": status == EXIT_OK,
        },
        lines,
    )
    return status


def cmd_independent(args, out: Output) -> int:
    try:
        a = parse_matrix(_read_input(args.input), args.field)
    except (ParseError, DivisionByZero) as exc:
        return _error(str(exc), EXIT_PARSE)
    t = a.to_tuple()
    r = rank(t)
    indep = is_linearly_independent(t)
    spans = spans_ambient(t)
    out.record(
        {
            "command": "independent",
            "field": args.field.name,
            "rank": r,
            "independent": indep,
            "spans": spans,
        },
        [
            f"rank = {r}",
            "independent" if indep else "dependent",
            f"spans F^{t.dim}" if spans else f"does not span F^{t.dim}",
        ],
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field_arg, default=FieldDescriptor.rational(),
                        help="rational (default) or gf:<p>")
    common.add_argument("--machine", action="store_true",
                        help="emit one JSON record per result")
    common.add_argument("--algorithm", choices=sorted(_ALGORITHMS), default="crosscheck")
    common.add_argument("--trials", type=_positive_int, default=200)
    common.add_argument("--seed", type=_seed_arg, default=0)

    parser = argparse.ArgumentParser(prog="detlab", description="Exact determinants, Cramer's rule and determinant-property checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("det", parents=[common], help="determinant of a square matrix")
    p.add_argument("input", nargs="?", default="-")
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("solve", parents=[common], help="solve a square system by Cramer's rule")
    p.add_argument("input", nargs="?", default="-")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", parents=[common], help="sample determinant properties of a functional")
    p.add_argument("functional", help="det:<n> | scaled:<c>:<inner> | lifted:<inner> | xminusy | xy")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("independent", parents=[common], help="rank and independence of the rows")
    p.add_argument("input", nargs="?", default="-")
    p.set_defaults(func=cmd_independent)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    args.algorithm = _ALGORITHMS[args.algorithm]
    try:
        return args.func(args, Output(args.machine))
    except OSError as exc:
        return _error(str(exc), EXIT_PARSE)


if __name__ == "__main__":
    sys.exit(main())
