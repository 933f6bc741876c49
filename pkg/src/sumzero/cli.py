"""Command-line interface: ``sumzero {table,stirling,poincare,verify}``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

import argparse
import json
import sys

from .classes import S_ELLIPTIC, Space, class_polynomial, virtual_poincare
from .errors import ResourceLimitError
from .oracles import DEFAULT_BUDGET
from .poly import IntPoly
from .stirling import DEFAULT_N_MAX, get_table
from .verify import FAIL, run_all

FORMATS = ("plain", "latex", "json", "csv")


class UsageError(Exception):
    pass


def parse_range(text):
    """``"5"`` -> (5, 5); ``"2..8"`` -> (2, 8), inclusive."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None
    return lo, hi


def _check_range(lo, hi, n_max, low=1):
    if not low <= lo <= hi:
        raise UsageError(f"invalid range {lo}..{hi}: need {low} <= start <= end")
    if hi > n_max:
        raise UsageError(f"range end {hi} exceeds --n-max {n_max}")


def _dump(obj):
    return json.dumps(obj, separators=(",", ":"))


def _poly_line(n, poly, fmt, extra):
    if fmt == "plain":
        return poly.to_plain()
    if fmt == "latex":
        return f"{n} & {poly.to_latex()} \\\\"
    if fmt == "json":
        return _dump({"n": n, **extra, "coeffs": [str(c) for c in poly.coeffs]})
    return ",".join(str(v) for v in (n, poly.degree, *poly.coeffs))


def cmd_table(args, out):
    lo, hi = args.n
    _check_range(lo, hi, args.n_max)
    space = Space(args.space)
    for n in range(lo, hi + 1):
        poly = class_polynomial(space, n, args.n_max).poly.with_var("E")
        out.write(_poly_line(n, poly, args.format, {"space": space.value}) + "\n")
    return 0


def cmd_stirling(args, out):
    lo, hi = args.n
    _check_range(lo, hi, args.n_max)
    table = get_table(args.n_max)
    for n in range(lo, hi + 1):
        row = table.row(args.kind, n)
        if args.format == "plain":
            line = ", ".join(map(str, row))
        elif args.format == "latex":
            line = f"{n} & " + " & ".join(map(str, row)) + " \\\\"
        elif args.format == "json":
            line = _dump({"n": n, "kind": args.kind, "values": [str(v) for v in row]})
        else:
            line = ",".join(map(str, (n, *row)))
        out.write(line + "\n")
    return 0


def _parse_sx(text):
    try:
        return IntPoly.from_json(text, "x")
    except (ValueError, TypeError) as exc:
        raise UsageError(f"--sx must be a JSON array of integers, lowest degree first: {exc}") from None


def cmd_poincare(args, out):
    lo, hi = args.n
    _check_range(lo, hi, args.n_max)
    sx = _parse_sx(args.sx) if args.sx is not None else S_ELLIPTIC
    space = Space(args.space)
    for n in range(lo, hi + 1):
        poly = virtual_poincare(class_polynomial(space, n, args.n_max), sx)
        out.write(_poly_line(n, poly, args.format, {"space": space.value}) + "\n")
    return 0


def cmd_verify(args, out):
    if args.n_max < 1:
        raise UsageError("--n-max must be at least 1")
    if args.oracle_budget < 0:
        raise UsageError("--oracle-budget must be non-negative")
    results = run_all(n_max=args.n_max, budget=args.oracle_budget)
    for r in results:
        out.write(r.line() + "\n")
    failed = sum(r.status == FAIL for r in results)
    out.write(f"{len(results) - failed}/{len(results)} checks without failure\n")
    return 1 if failed else 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n-max", type=int, default=DEFAULT_N_MAX, help="largest n the Stirling tables cover")

    parser = argparse.ArgumentParser(
        prog="sumzero",
        description="Class polynomials and virtual Poincaré polynomials of configuration spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[common], help="class polynomials [F_n(E)] or [F_n^0(E)]")
    p.add_argument("--space", choices=[s.value for s in Space], default="fn0")
    p.add_argument("--n", type=parse_range, default=(2, 8), help="N or A..B (default 2..8)")
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("stirling", parents=[common], help="rows of s(n,k) or s_m(n,k)")
    p.add_argument("--kind", choices=["s", "sm"], default="s")
    p.add_argument("--n", type=parse_range, required=True, help="N or A..B")
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.set_defaults(func=cmd_stirling)

    p = sub.add_parser("poincare", parents=[common], help="virtual Poincaré polynomial in x")
    p.add_argument("--space", choices=[s.value for s in Space], default="fn0")
    p.add_argument("--n", type=parse_range, required=True, help="N or A..B")
    p.add_argument("--sx", default=None, help="S(X) as a JSON array, lowest degree first (default [1,2,1])")
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.set_defaults(func=cmd_poincare)

    p = sub.add_parser("verify", parents=[common], help="run the self-check suite")
    p.add_argument("--oracle-budget", type=int, default=DEFAULT_BUDGET, help="max tuple visits per oracle call")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, ResourceLimitError, ValueError) as exc:
        print(f"sumzero {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
