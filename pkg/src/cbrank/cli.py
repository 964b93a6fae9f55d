"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (e.g. a point outside the
set, an ordinal underflow), 2 on a parse or usage error.  Terms travel as
JSON files (``-`` reads standard input; as an output path it means
standard output).  ``CBRANK_DEPTH`` sets the default
enumeration depth.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import classify, oracle, primitive, serialize
from .notation import ParseError, parse_ordinal
from .ordinal import compare, divides_omega_pow, left_subtract
from .setterm import (
    Interval, cb_characteristic, derivative_upto, points, realize,
)

DEFAULT_GRID = "0,1,2,3,w,w+1,w*2,w^2,w^2+w*3+1,w^w"


class UsageError(Exception):
    pass


def _default_depth() -> int:
    raw = os.environ.get("CBRANK_DEPTH", "4")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"CBRANK_DEPTH must be an integer, got {raw!r}")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _read_term(path: str):
    try:
        return serialize.loads(_read_text(path))
    except (json.JSONDecodeError, KeyError) as exc:
        raise UsageError(f"{path}: not a term file ({exc})")


def _emit(text: str, out: str | None):
    if out and out != "-":
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _ordinal_list(text: str) -> list:
    return [parse_ordinal(part) for part in text.split(",") if part.strip()]


# -- subcommands -----------------------------------------------------------------


def cmd_ord(args):
    if args.op == "eval":
        (a,) = _operands(args, 1)
        print(a)
    elif args.op == "cmp":
        a, b = _operands(args, 2)
        print({-1: "<", 0: "=", 1: ">"}[int(compare(a, b))])
    elif args.op == "sub":
        b, a = _operands(args, 2)
        print(left_subtract(b, a))
    elif args.op == "divides":
        beta, delta = _operands(args, 2)
        print("true" if divides_omega_pow(beta, delta) else "false")


def _operands(args, n):
    if len(args.operands) != n:
        raise UsageError(f"ord {args.op} takes {n} operand(s)")
    return [parse_ordinal(text) for text in args.operands]


def cmd_realize(args):
    term = realize(parse_ordinal(args.alpha), args.p, serialize.parse_interval(args.interval))
    _emit(serialize.dumps(term) + "\n", args.out)
    if args.csv:
        _emit(points(term, args.depth).to_csv(), args.csv)


def cmd_derive(args):
    term = derivative_upto(_read_term(args.term), parse_ordinal(args.beta))
    if args.depth is not None:
        _emit(points(term, args.depth).to_csv(), args.out)
    else:
        _emit(serialize.dumps(term) + "\n", args.out)


def cmd_points(args):
    _emit(points(_read_term(args.term), args.depth).to_csv(), args.out)


def cmd_cb_char(args):
    print(cb_characteristic(_read_term(args.term)))


def cmd_equiv(args):
    same = classify.equivalent(_read_term(args.first), _read_term(args.second))
    print("equivalent" if same else "not equivalent")


def cmd_address(args):
    term = _read_term(args.term)
    if args.point is not None:
        print(classify.ordinal_of_point(term, serialize.parse_rational(args.point)))
    else:
        q = classify.point_of_ordinal(term, parse_ordinal(args.ordinal))
        print(f"{q.numerator}/{q.denominator}")


def cmd_primitive(args):
    if args.points:
        values = serialize.parse_rationals(_read_text(args.points))
    else:
        values = serialize.parse_rationals(args.inline)
    term = primitive.primitive_of(values, parse_ordinal(args.alpha))
    _emit(serialize.dumps(term) + "\n", args.out)


def _verify_cell(alpha, p, depth):
    term = realize(alpha, p, Interval(0, 1))
    return oracle.cross_check(term, depth)


def cmd_verify(args):
    bad = oracle.validate_closed_form()
    print(f"closed form vs brute force (alpha<=2, p<=3): {'ok' if not bad else f'{len(bad)} mismatches'}")
    if bad:
        return 1
    alphas = _ordinal_list(args.grid)
    ps = [int(x) for x in args.p.split(",") if x.strip()]
    cells = [(a, p) for a in alphas for p in ps if p > 0]
    with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
        results = list(pool.map(lambda c: _verify_cell(c[0], c[1], args.depth), cells))
    failures = 0
    for (alpha, p), result in zip(cells, results):
        status = "ok" if result.ok else f"FAIL ({len(result.mismatches)} mismatches)"
        failures += not result.ok
        print(f"alpha={alpha} p={p} checks={result.checks} {status}")
    print(f"{len(cells) - failures}/{len(cells)} cells agree")
    return 1 if failures else 0


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    depth = _default_depth()
    parser = argparse.ArgumentParser(
        prog="cbrank",
        description="Cantor-Bendixson derivatives of compact countable subsets of the reals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ord", help="ordinal arithmetic in w-notation")
    p.add_argument("op", choices=["eval", "cmp", "sub", "divides"])
    p.add_argument("operands", nargs="+")
    p.set_defaults(func=cmd_ord)

    p = sub.add_parser("realize", help="build a term with characteristic (alpha, p)")
    p.add_argument("--alpha", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--interval", default="0,1", help="a,b for the half-open interval (a, b]")
    p.add_argument("--depth", type=int, default=depth)
    p.add_argument("--out", help="write the term JSON here instead of stdout")
    p.add_argument("--csv", help="also export the depth enumeration as CSV")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("derive", help="transfinite derivative of a term")
    p.add_argument("term")
    p.add_argument("--beta", required=True)
    p.add_argument("--depth", type=int, help="print the enumeration as CSV instead of JSON")
    p.add_argument("--out")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("points", help="export a depth enumeration as CSV")
    p.add_argument("term")
    p.add_argument("--depth", type=int, default=depth)
    p.add_argument("--out")
    p.set_defaults(func=cmd_points)

    p = sub.add_parser("cb-char", help="Cantor-Bendixson characteristic")
    p.add_argument("term")
    p.set_defaults(func=cmd_cb_char)

    p = sub.add_parser("equiv", help="decide whether two terms are homeomorphic")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("address", help="ordinal address of a point, or the point at an address")
    p.add_argument("term")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--point")
    group.add_argument("--ordinal")
    p.set_defaults(func=cmd_address)

    p = sub.add_parser("primitive", help="compact set whose alpha-th derivative is F")
    p.add_argument("--alpha", required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--points", help="file with one num/den per line")
    group.add_argument("--inline", help="comma-separated rationals")
    p.add_argument("--out")
    p.set_defaults(func=cmd_primitive)

    p = sub.add_parser("verify", help="cross-check derivatives against the ordinal oracle")
    p.add_argument("--grid", default=DEFAULT_GRID, help="comma-separated alphas")
    p.add_argument("--p", default="1,2,3,4,5")
    p.add_argument("--depth", type=int, default=depth)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    try:
        parser = build_parser()
        args = parser.parse_args(argv)
        return args.func(args) or 0
    except (ParseError, serialize.FormatError, UsageError) as exc:
        print(f"cbrank: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"cbrank: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
