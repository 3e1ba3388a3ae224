"""Command-line front end.

Exit codes: 0 success / property holds, 1 property false or bound violated,
2 usage, I/O or construction error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import astuple, dataclass, fields
from fractions import Fraction

from . import complex as cx
from .constructions import (
    build_lfsr_complex,
    double_closed_corridor,
    double_corridor,
    drop_facet,
    lfsr_lower_bound,
    pm_lower_bound,
)
from .errors import Disconnected, NotFound, ScxError
from .field import make_field
from .primpoly import Polynomial, count_primitive, find_primitive


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _summary(C: cx.PureComplex) -> str:
    shape = cx.classify_dual(C).shape.value if C.facets else "empty"
    return f"{shape}, {len(C.facets)} facets, n={C.n}"


def cmd_gen(args) -> int:
    if args.kind == "lfsr":
        poly = Polynomial.from_indices(args.q, args.poly) if args.poly else None
        C = build_lfsr_complex(args.q, args.d, poly, args.seed)
        if args.drop_facet is not None:
            C = drop_facet(C, args.drop_facet)
    else:
        if not args.input:
            raise UsageError("gen double needs --input")
        src = cx.read_complex(args.input)
        C = double_closed_corridor(src) if args.closed else double_corridor(src)
    cx.write_complex(C, args.output)
    print(_summary(C))
    return 0


PREDICATES = {
    "pm": cx.is_pseudo_manifold,
    "duoid": cx.is_semi_duoid,
    "normal": cx.is_normal,
    "corridor": lambda C: bool(C.facets) and cx.classify_dual(C).shape is cx.DualShape.PATH,
    "closed_corridor": lambda C: bool(C.facets) and cx.classify_dual(C).shape is cx.DualShape.CYCLE,
    "connected": cx.is_strongly_connected,
}


def cmd_check(args) -> int:
    C = cx.read_complex(args.input)
    requested = [name for name in PREDICATES if getattr(args, name)]
    ok = True
    for name in requested or PREDICATES:
        value = PREDICATES[name](C)
        print(f"{name.replace('_', '-')}: {str(value).lower()}")
        if name in requested:
            ok = ok and value
    return 0 if ok else 1


def cmd_diameter(args) -> int:
    C = cx.read_complex(args.input)
    try:
        print(cx.diameter(C, threads=args.threads))
    except Disconnected:
        print("disconnected", file=sys.stderr)
        return 1
    return 0


def cmd_poly(args) -> int:
    F = make_field(args.q)
    if args.deg < 1:
        raise UsageError("--deg must be >= 1")
    if args.count:
        print(count_primitive(F, args.deg, all_nonzero=args.all_nonzero))
        return 0
    try:
        f = find_primitive(F, args.deg, all_nonzero=args.all_nonzero)
    except NotFound as exc:
        print(exc, file=sys.stderr)
        return 1
    print(",".join(map(str, f.coeffs)))
    return 0


@dataclass
class ReportRow:
    kind: str
    q: int
    d: int
    n: int
    used: int
    facets: int
    diameter: int
    lower: Fraction
    upper: int

    def holds(self) -> bool:
        return self.lower <= self.diameter <= self.upper


def _row(kind: str, q: int, C: cx.PureComplex, lower: Fraction) -> ReportRow:
    return ReportRow(
        kind,
        q,
        C.d,
        C.n,
        len(C.used_vertices()),
        len(C.facets),
        cx.diameter(C),
        lower,
        cx.hirsch_upper_bound(C.n, C.d),
    )


def report_rows(q: int, d: int, double: bool = False) -> list[ReportRow]:
    corridor = drop_facet(build_lfsr_complex(q, d), 0)
    rows = [_row("corridor", q, corridor, lfsr_lower_bound(corridor.n, d))]
    if double:
        pm = double_corridor(corridor)
        rows.append(_row("pseudo-manifold", q, pm, pm_lower_bound(pm.n, d)))
    return rows


def _fmt(x) -> str:
    if isinstance(x, Fraction) and x.denominator == 1:
        return str(x.numerator)
    return str(x)


def cmd_report(args) -> int:
    rows = report_rows(args.q, args.d, args.double)
    header = [f.name for f in fields(ReportRow)] + ["ok"]
    table = [[_fmt(x) for x in astuple(r)] + [str(r.holds()).lower()] for r in rows]
    if args.tsv:
        for line in [header] + table:
            print("\t".join(line))
    else:
        widths = [max(len(line[i]) for line in [header] + table) for i in range(len(header))]
        for line in [header] + table:
            print("  ".join(cell.rjust(w) for cell, w in zip(line, widths)).rstrip())
    return 0 if all(r.holds() for r in rows) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="scxkit", description="Build and verify long-diameter pure complexes.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate an scx v1 file")
    gen.add_argument("kind", choices=("lfsr", "double"))
    gen.add_argument("--q", type=int)
    gen.add_argument("--d", type=int)
    gen.add_argument("--poly", type=_int_list, help="a_1,...,a_{d-1} as canonical indices")
    gen.add_argument("--seed", type=_int_list)
    gen.add_argument("--drop-facet", type=int)
    gen.add_argument("--input")
    gen.add_argument("--closed", action="store_true")
    gen.add_argument("-o", "--output", required=True)
    gen.set_defaults(func=cmd_gen)

    check = sub.add_parser("check", help="test complex-class predicates")
    check.add_argument("--input", required=True)
    check.add_argument("--pm", action="store_true")
    check.add_argument("--duoid", action="store_true")
    check.add_argument("--normal", action="store_true")
    check.add_argument("--corridor", action="store_true")
    check.add_argument("--closed-corridor", action="store_true")
    check.add_argument("--connected", action="store_true")
    check.set_defaults(func=cmd_check)

    diam = sub.add_parser("diameter", help="dual-graph diameter")
    diam.add_argument("--input", required=True)
    diam.add_argument("--threads", type=int, default=1)
    diam.set_defaults(func=cmd_diameter)

    poly = sub.add_parser("poly", help="primitive polynomials")
    poly_sub = poly.add_subparsers(dest="poly_command", required=True)
    search = poly_sub.add_parser("search")
    search.add_argument("--q", type=int, required=True)
    search.add_argument("--deg", type=int, required=True)
    search.add_argument("--all-nonzero", action="store_true")
    search.add_argument("--count", action="store_true")
    search.set_defaults(func=cmd_poly)

    report = sub.add_parser("report", help="measured diameters against the bounds")
    report.add_argument("--q", type=int, required=True)
    report.add_argument("--d", type=int, required=True)
    report.add_argument("--double", action="store_true")
    report.add_argument("--tsv", action="store_true")
    report.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    if args.command == "gen" and args.kind == "lfsr" and (args.q is None or args.d is None):
        print("scxkit: gen lfsr needs --q and --d", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (ScxError, UsageError, OSError, ValueError) as exc:
        print(f"scxkit: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
