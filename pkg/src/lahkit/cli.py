"""Command-line interface.

Subcommands::

    lahkit value  --kind hlah --s 2 --n 4 --k 3
    lahkit table  --kind olah --s 2 --nmax 6 --format tsv|json|pretty|bfile
    lahkit bfile  --kind olah --s 2 --nmax 6 --offset 1
    lahkit poly   expand|convert|row|step ...
    lahkit verify --suite oracle|identities|inequalities|closed-forms|all

Exit status is 0 on success, 1 when a verification check fails and 2 on
bad arguments.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import polynomials as P
from . import triangles as T
from .errors import ParameterError
from .verify import SUITES, run_suite

KINDS = [f.value for f in T.Family]


def _kind(args) -> T.TriangleKind:
    if args.kind == "lrlah" and args.r is None:
        raise ParameterError("--kind lrlah requires --r")
    return T.TriangleKind.parse(args.kind, args.r)


def _add_kind(p, nmax=False):
    p.add_argument("--kind", required=True, choices=KINDS)
    p.add_argument("--s", type=int, required=True, help="level / order s >= 1")
    p.add_argument("--r", type=int, default=None, help="r for --kind lrlah")
    if nmax:
        p.add_argument("--nmax", type=int, required=True)


def cmd_value(args, out):
    out.write(f"{T.value(_kind(args), args.n, args.k, args.s)}\n")


def _bfile_lines(table, offset):
    index = offset
    for row in table.rows:
        for v in row:
            yield f"{index} {v}\n"
            index += 1


def _pretty(table):
    cells = [[str(v) for v in row] for row in table.rows]
    width = max(len(c) for row in cells for c in row)
    lines = [f"{table.kind}  s={table.s}"]
    for n, row in enumerate(cells):
        lines.append(f"{n:>3} | " + " ".join(c.rjust(width) for c in row))
    return "\n".join(lines) + "\n"


def cmd_table(args, out):
    kind = _kind(args)
    if args.offset < 0:
        raise ParameterError("--offset must be >= 0")
    table = T.triangle(kind, args.s, args.nmax)
    fmt = args.format
    if fmt == "tsv":
        for row in table.rows:
            out.write("\t".join(str(v) for v in row) + "\n")
    elif fmt == "json":
        doc = {"kind": kind.family.value, "s": args.s}
        if kind.r is not None:
            doc["r"] = kind.r
        doc["rows"] = [[str(v) for v in row] for row in table.rows]
        out.write(json.dumps(doc, separators=(",", ":")) + "\n")
    elif fmt == "bfile":
        out.writelines(_bfile_lines(table, args.offset))
    else:
        out.write(_pretty(table))


def cmd_bfile(args, out):
    if args.offset < 0:
        raise ParameterError("--offset must be >= 0")
    table = T.triangle(_kind(args), args.s, args.nmax)
    out.writelines(_bfile_lines(table, args.offset))


def _emit(poly, fmt, out):
    out.write((poly.to_json() if fmt == "json" else poly.to_text()) + "\n")


def _row_poly(kind, n, s, r):
    if kind == "hlah":
        return P.row_poly_hl(n, s)
    if kind == "olah":
        return P.lah_order_poly(n, s)
    if kind == "q":
        return P.q_poly(n, s)
    if r is None:
        raise ParameterError("--kind lrlah requires --r")
    return P.lr_row_poly(n, s, r)


def cmd_poly(args, out):
    op = args.op
    if op == "expand":
        _emit(P.factorial_poly("falling" if args.falling else "rising", args.n, args.s), args.format, out)
    elif op == "convert":
        source = P.BasisTag.parse(args.source)
        target = P.BasisTag.parse(args.target)
        given = [x for x in (args.n, args.coeffs) if x is not None]
        if len(given) != 1:
            raise ParameterError("poly convert needs exactly one of --n or --coeffs")
        if args.n is not None:
            if args.n < 0:
                raise ParameterError("--n must be >= 0")
            p = P.Polynomial.basis_element(source, args.n)
        else:
            p = P.Polynomial.from_text(f"basis={source} coeffs=[{args.coeffs.strip('[]')}]")
        _emit(P.convert(p, target), args.format, out)
    elif op == "row":
        _emit(_row_poly(args.kind, args.n, args.s, args.r), args.format, out)
    else:
        before = _row_poly(args.kind, args.n, args.s, args.r)
        step = {
            "hlah": P.row_poly_hl_step,
            "olah": P.lah_order_poly_step,
            "q": P.q_step,
            "lrlah": P.lr_row_poly_step,
        }[args.kind]
        after = step(before, args.n, args.s)
        out.write(f"before n={args.n}: {before.to_text()}\n")
        out.write(f"after n={args.n + 1}: {after.to_text()}\n")


def cmd_verify(args, out):
    results = run_suite(args.suite, args.nmax, args.smax)
    for res in results:
        out.write(res.line() + "\n")
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lahkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("value", help="print one triangle entry")
    _add_kind(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_value)

    p = sub.add_parser("table", help="print rows 0..nmax of a triangle")
    _add_kind(p, nmax=True)
    p.add_argument("--format", choices=["tsv", "json", "pretty", "bfile"], default="tsv")
    p.add_argument("--offset", type=int, default=0, help="first b-file index (bfile format)")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("bfile", help="print a triangle flattened by rows as an OEIS b-file")
    _add_kind(p, nmax=True)
    p.add_argument("--offset", type=int, default=0)
    p.set_defaults(func=cmd_bfile)

    p = sub.add_parser("poly", help="polynomial expansions, conversions and recurrences")
    ops = p.add_subparsers(dest="op", required=True)
    e = ops.add_parser("expand", help="expand a factorial with higher level")
    which = e.add_mutually_exclusive_group(required=True)
    which.add_argument("--rising", action="store_true")
    which.add_argument("--falling", action="store_true")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--s", type=int, required=True)
    c = ops.add_parser("convert", help="change basis")
    c.add_argument("--from", dest="source", required=True, help="standard | rising:S | falling:S")
    c.add_argument("--to", dest="target", required=True)
    c.add_argument("--n", type=int, help="convert the source basis element of degree n")
    c.add_argument("--coeffs", help="comma-separated source coefficients c0,c1,...")
    for name, sp in (("row", "row polynomial"), ("step", "one recurrence step")):
        q = ops.add_parser(name, help=sp)
        q.add_argument("--kind", required=True, choices=["hlah", "olah", "lrlah"] + (["q"] if name == "step" else []))
        q.add_argument("--n", type=int, required=True)
        q.add_argument("--s", type=int, required=True)
        q.add_argument("--r", type=int, default=None)
    for q in (e, c, ops.choices["row"]):
        q.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("verify", help="run invariant suites")
    p.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--smax", type=int, default=3)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        status = args.func(args, out)
    except ParameterError as exc:
        parser.print_usage(sys.stderr)
        print(f"lahkit: error: {exc}", file=sys.stderr)
        return 2
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
