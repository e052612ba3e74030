"""Command-line front end.

Exit codes: 0 success, 1 identity/oracle failure, 2 usage or parse error,
3 truncation order exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from typing import Sequence

from . import catalog
from .bell import bell_polynomial, bell_via_series
from .errors import OrderExceeded, SeriesError
from .gfparse import GfSemanticError, GfSyntaxError, series_from_text
from .identities import SUITE_NAMES, SuiteBounds, run_suite
from .onepth import (
    OnePthSpec,
    Orientation,
    a_seq_formula,
    first_mismatch,
    onepth,
    oracle,
    parent_order_required,
)
from .riordan import RiordanArray, a_sequence, inverse, multiply, z_sequence
from .series import DEFAULT_ORDER, agree, format_series, revert

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_ORDER = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _fmt(x) -> str:
    return str(Fraction(x)) if isinstance(x, (int, Fraction)) else str(x)


def _json_value(x):
    if isinstance(x, Fraction):
        return str(x)
    return x


# -- rendering ------------------------------------------------------------------

def render_matrix(m, fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "k", "value"])
        for n, row in enumerate(m):
            for k in range(n + 1):
                w.writerow([n, k, _fmt(row[k])])
        return buf.getvalue()
    if fmt == "jsonl":
        return "".join(json.dumps({"n": n, "k": k, "value": _fmt(row[k])}) + "\n"
                       for n, row in enumerate(m) for k in range(n + 1))
    cells = [[_fmt(x) for x in row] for row in m]
    if not cells:
        return ""
    widths = [max(len(row[k]) for row in cells) for k in range(len(cells[0]))]
    return "".join(" ".join(c.rjust(w) for c, w in zip(row, widths)) + "\n" for row in cells)


def render_sequences(named: list[tuple[str, object]], fmt: str) -> str:
    """Series or verdict lines: ``label: c0, c1, ...``."""
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["sequence", "n", "value"])
        for label, s in named:
            if isinstance(s, str):
                w.writerow([label, "", s])
            else:
                for n, x in enumerate(s.coeffs):
                    w.writerow([label, n, _fmt(x)])
        return buf.getvalue()
    if fmt == "jsonl":
        return "".join(json.dumps({"sequence": label,
                                   "value": s if isinstance(s, str) else
                                   [_fmt(x) for x in s.coeffs]}) + "\n"
                       for label, s in named)
    return "".join(f"{label}: {s if isinstance(s, str) else format_series(s)}\n"
                   for label, s in named)


# -- argument helpers -----------------------------------------------------------

def _array_from(name: str | None, g: str | None, f: str | None, order: int) -> RiordanArray:
    if name is not None:
        if g is not None or f is not None:
            raise UsageError("give either a catalog name or --g/--f, not both")
        try:
            return catalog.array(name, order)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from exc
    if g is None or f is None:
        raise UsageError("need a catalog array name or both --g and --f")
    return RiordanArray(series_from_text(g, order), series_from_text(f, order))


def _source(args, order: int) -> RiordanArray:
    return _array_from(args.source, args.g, args.f, order)


def _rows(args, order: int) -> int:
    if args.rows < 1:
        raise UsageError("--rows must be positive")
    if args.rows - 1 > order:
        raise OrderExceeded(f"{args.rows} rows need order {args.rows - 1}, have {order}")
    return args.rows


def _rational_list(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(tok.strip()) for tok in text.split(",") if tok.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad rational list {text!r}") from exc


# -- commands -------------------------------------------------------------------

def cmd_show(args, out) -> int:
    R = _source(args, args.order)
    out.write(render_matrix(R.matrix(_rows(args, R.order)), args.format))
    return EXIT_OK


def cmd_inverse(args, out) -> int:
    R = inverse(_source(args, args.order))
    out.write(render_matrix(R.matrix(_rows(args, R.order)), args.format))
    return EXIT_OK


def cmd_multiply(args, out) -> int:
    if args.right is None and (args.g2 is None or args.f2 is None):
        raise UsageError("need a second array: a catalog name or --g2/--f2")
    left = _source(args, args.order)
    right = _array_from(args.right, args.g2, args.f2, args.order)
    R = multiply(left, right)
    out.write(render_matrix(R.matrix(_rows(args, R.order)), args.format))
    return EXIT_OK


def cmd_onepth(args, out) -> int:
    spec = OnePthSpec(args.p, args.r, Orientation(args.orientation))
    if args.rows < 1:
        raise UsageError("--rows must be positive")
    target = args.rows - 1
    parent_order = max(args.order, parent_order_required(spec.p, spec.r, target))
    print(f"effective parent order: {parent_order}", file=sys.stderr)
    R = _source(args, parent_order)
    A = onepth(R, spec, order=target)
    m = A.matrix(args.rows)
    out.write(render_matrix(m, args.format))
    if args.check_oracle:
        bad = first_mismatch(m, oracle(R, spec, args.rows))
        if bad is None:
            out.write("MATCH\n")
        else:
            n, k, x, y = bad
            out.write(f"MISMATCH at ({n},{k}): gf={x} oracle={y}\n")
            return EXIT_FAIL
    return EXIT_OK


def cmd_aseq(args, out) -> int:
    R = _source(args, args.order)
    lines: list[tuple[str, object]] = [("A", a_sequence(R))]
    if R.g.coeffs[0] == 1:
        lines.append(("Z", z_sequence(R)))
    status = EXIT_OK
    if args.formula:
        if args.p is None or args.orientation is None:
            raise UsageError("--formula needs -p and --orientation")
        spec = OnePthSpec(args.p, args.r, Orientation(args.orientation))
        computed = a_sequence(onepth(R, spec))
        predicted = a_seq_formula(R, spec.p, spec.orientation)
        n = min(computed.order, predicted.order)
        computed, predicted = computed.truncate(n), predicted.truncate(n)
        same = agree(computed, predicted)
        lines += [("formula", predicted), ("computed", computed),
                  ("verdict", "EQUAL" if same else "DIFFERENT")]
        status = EXIT_OK if same else EXIT_FAIL
    out.write(render_sequences(lines, args.format))
    return status


def cmd_identities(args, out) -> int:
    bounds = SuiteBounds(p_max=args.p_max, r_max=args.r_max, n_max=args.n_max,
                         order=args.order, perturb_beta=args.perturb_beta,
                         **({"rational_grid": args.r_grid} if args.r_grid else {}))
    names = args.suite or list(SUITE_NAMES)
    reports = run_suite(names, bounds, keep_cases=args.verbose)
    failed = any(not rep.ok for rep in reports)
    for rep in reports:
        if args.format == "jsonl":
            if args.verbose:
                for c in rep.cases:
                    out.write(json.dumps({
                        "suite": rep.name, "name": c.name,
                        "params": {k: _json_value(v) for k, v in c.params.items()},
                        "lhs": _fmt(c.lhs), "rhs": _fmt(c.rhs), "pass": c.passed}) + "\n")
            ff = rep.first_failure
            out.write(json.dumps({
                "suite": rep.name, "grid": rep.grid, "total": rep.total, "passed": rep.passed,
                "failed": rep.failed, "skipped": rep.skipped,
                "first_failure": None if ff is None else {
                    "name": ff.name, "params": {k: _json_value(v) for k, v in ff.params.items()},
                    "lhs": _fmt(ff.lhs), "rhs": _fmt(ff.rhs)}}) + "\n")
        elif args.format == "csv":
            if rep is reports[0]:
                out.write("suite,total,passed,failed,skipped\n")
            out.write(f"{rep.name},{rep.total},{rep.passed},{rep.failed},{rep.skipped}\n")
        else:
            verdict = "PASS" if rep.ok else "FAIL"
            out.write(f"{rep.name:18} {verdict}  {rep.passed}/{rep.total} passed, "
                      f"{rep.skipped} skipped  [{rep.grid}]\n")
            if args.verbose:
                for c in rep.cases:
                    params = " ".join(f"{k}={_json_value(v)}" for k, v in c.params.items())
                    out.write(f"  {'ok ' if c.passed else 'BAD'} {c.name} {params}: "
                              f"{_fmt(c.lhs)} vs {_fmt(c.rhs)}\n")
            if rep.first_failure is not None:
                ff = rep.first_failure
                params = " ".join(f"{k}={_json_value(v)}" for k, v in ff.params.items())
                out.write(f"  first failure: {ff.name} {params}: "
                          f"lhs={_fmt(ff.lhs)} rhs={_fmt(ff.rhs)}\n")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_bell(args, out) -> int:
    N = args.n_max
    f = series_from_text(args.f, max(N, 1))
    if f.coeffs[0] != 0:
        raise UsageError("bell needs f(0) = 0")
    fact = 1
    x = []
    for i in range(1, N + 1):
        fact *= i
        x.append(f.coeffs[i] * fact)
    m = [[bell_polynomial(n, k, x) if 1 <= k <= n else Fraction(int(n == k == 0))
          for k in range(N + 1)] for n in range(N + 1)]
    out.write(render_matrix(m, args.format))
    bad = None
    for n in range(1, N + 1):
        for k in range(1, n + 1):
            if m[n][k] != bell_via_series(f, n, k):
                bad = bad or (n, k)
    if bad:
        out.write(f"MISMATCH at ({bad[0]},{bad[1]})\n")
        return EXIT_FAIL
    if args.format == "table":
        out.write("MATCH\n")
    return EXIT_OK


def cmd_series(args, out) -> int:
    s = series_from_text(args.expr, args.order)
    if args.revert:
        s = revert(s)
    out.write(render_sequences([("series", s)], args.format) if args.format != "table"
              else format_series(s) + "\n")
    return EXIT_OK


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=DEFAULT_ORDER,
                        help="truncation order N (default %(default)s)")
    common.add_argument("--format", choices=("table", "csv", "jsonl"), default="table")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("source", nargs="?", choices=catalog.ARRAY_NAMES,
                        help="catalog array name")
    source.add_argument("--g", help="expression for g(t)")
    source.add_argument("--f", help="expression for f(t)")
    source.add_argument("--rows", type=int, default=6)

    parser = argparse.ArgumentParser(prog="riordankit",
                                     description="Exact Riordan-array and one-pth array toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("show", parents=[common, source], help="print the leading matrix block")
    p.set_defaults(func=cmd_show)

    p = sub.add_parser("inverse", parents=[common, source], help="print the inverse array")
    p.set_defaults(func=cmd_inverse)

    p = sub.add_parser("multiply", parents=[common, source], help="print the product of two arrays")
    p.add_argument("right", nargs="?", choices=catalog.ARRAY_NAMES)
    p.add_argument("--g2")
    p.add_argument("--f2")
    p.set_defaults(func=cmd_multiply)

    p = sub.add_parser("onepth", parents=[common, source], help="build a one-pth array")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-r", type=int, default=0)
    p.add_argument("--orientation", choices=[o.value for o in Orientation], required=True)
    p.add_argument("--check-oracle", action="store_true",
                   help="compare against direct index extraction")
    p.set_defaults(func=cmd_onepth)

    p = sub.add_parser("aseq", parents=[common, source], help="A- and Z-sequences")
    p.add_argument("--formula", action="store_true",
                   help="compare with the predicted A-sequence of a one-pth array")
    p.add_argument("-p", type=int)
    p.add_argument("-r", type=int, default=0)
    p.add_argument("--orientation", choices=[o.value for o in Orientation])
    p.set_defaults(func=cmd_aseq)

    p = sub.add_parser("identities", parents=[common], help="run identity suites")
    p.add_argument("--suite", action="append", choices=SUITE_NAMES,
                   help="suite to run (repeatable; default all)")
    p.add_argument("--p-max", type=int, default=4)
    p.add_argument("--r-max", type=int, default=3)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--r-grid", type=_rational_list,
                   help="comma-separated rationals for the gkp-562 and gould grids")
    p.add_argument("--verbose", action="store_true", help="emit every grid point")
    p.add_argument("--perturb-beta", action="store_true",
                   help="negative control: add 1 to beta_1 in summation-type suites")
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("bell", parents=[common], help="partial Bell polynomials of a series")
    p.add_argument("--f", required=True, help="expression for f(t) with f(0) = 0")
    p.add_argument("--n-max", type=int, default=6)
    p.set_defaults(func=cmd_bell)

    p = sub.add_parser("series", parents=[common], help="expand a generating function")
    p.add_argument("expr")
    p.add_argument("--revert", action="store_true", help="print the compositional inverse")
    p.set_defaults(func=cmd_series)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except OrderExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ORDER
    except GfSemanticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ORDER if exc.constraint == "OrderExceeded" else EXIT_USAGE
    except (GfSyntaxError, UsageError, SeriesError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        # downstream closed early (e.g. piped into head); silence the flush at exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
