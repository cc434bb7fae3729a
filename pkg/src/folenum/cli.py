"""Command-line interface.

Subcommands: ``eval``, ``locus``, ``table``, ``verify``, ``run``.
Exit codes: 0 success, 1 parse/usage error, 2 evaluation/type error,
3 verification mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .chow import abstract_surface_context, p2_context
from .dsl import (DslError, DslEvalError, DslSyntaxError, parse_expr,
                  parse_program, run_program, builtins_env, eval_expr,
                  value_text, BundleVal, ClassVal, Scalar)
from .loci import DEG_FUNCS, LocusReport, verify_all
from .ring import Q, RingElement, RingError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_EVAL = 2
EXIT_VERIFY = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; the CLI contract wants 1
    def error(self, message):
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _json_int(q) -> int | str:
    if q.denominator == 1 and abs(q.numerator) < 2 ** 63:
        return q.numerator
    return str(q) if q.denominator != 1 else str(q.numerator)


def poly_json(x: RingElement) -> dict | None:
    """``{"d^2": 66, "d^1": -198, "d^0": 153}`` for polynomials in d alone."""
    if not x.variables() <= {"d"}:
        return None
    coeffs = {}
    for m, c in x.terms.items():
        e = dict(m).get("d", 0)
        coeffs[e] = c
    top = max(coeffs, default=0)
    return {f"d^{e}": _json_int(coeffs.get(e, Q(0)))
            for e in range(top, -1, -1)}


def _context(surface: str):
    return abstract_surface_context() if surface == "general" else p2_context()


def report_dict(r: LocusReport, d: int | None = None) -> dict:
    out = {"locus": r.locus, "k": r.k, "codim": r.codim,
           "degree": r.degree.text(), "degree_poly": poly_json(r.degree),
           "validity": r.validity, "rank_M": r.rank_m.text(),
           "rank_D": r.rank_d.text(), "flags": list(r.flags)}
    if d is not None:
        out["d"] = d
        out["degree_at_d"] = _json_int(r.degree_at(d))
        out["flags"] = list(r.flags_at(d))
    return out


def _print_report_text(r: LocusReport, d: int | None):
    print(f"locus: {r.locus}_{r.k}")
    print(f"codim: {r.codim}")
    print(f"degree: {r.degree.text()}")
    if d is not None:
        print(f"degree at d={d}: {r.degree_at(d)}")
    print(f"validity: {r.validity}")
    print(f"rank_M: {r.rank_m.text()}")
    print(f"rank_D: {r.rank_d.text()}")
    for flag in (r.flags_at(d) if d is not None else r.flags):
        print(f"flag: {flag}")


def _cmd_eval(args) -> int:
    ctx = _context(args.surface)
    try:
        expr = parse_expr(args.expression)
    except DslSyntaxError as exc:
        print(exc.render(args.expression), file=sys.stderr)
        return EXIT_USAGE
    try:
        value = eval_expr(expr, builtins_env(ctx), ctx)
    except DslError as exc:
        print(exc.render(args.expression), file=sys.stderr)
        return EXIT_EVAL
    if args.format == "json":
        poly = poly_json(value.value) if isinstance(value, Scalar) else None
        print(json.dumps({"type": value.tag, "text": value_text(value),
                          "poly": poly}))
    else:
        print(value_text(value))
    return EXIT_OK


def _cmd_locus(args) -> int:
    if args.surface == "general" and args.locus == "C":
        print("the maximal-contact pipeline is specific to P^2; "
              "--surface general supports loci M and D", file=sys.stderr)
        return EXIT_EVAL
    ctx = _context(args.surface)
    try:
        report = DEG_FUNCS[args.locus](args.k, ctx)
    except RingError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_EVAL
    if args.format == "json":
        print(json.dumps(report_dict(report, args.d)))
    else:
        _print_report_text(report, args.d)
    return EXIT_OK


def _cmd_table(args) -> int:
    loci = [s.strip() for s in args.loci.split(",") if s.strip()]
    for locus in loci:
        if locus not in DEG_FUNCS:
            print(f"unknown locus {locus!r} (expected M, D or C)", file=sys.stderr)
            return EXIT_USAGE
    rows = []
    for locus in loci:
        k_lo = 2 if locus == "C" else 1
        for k in range(k_lo, args.kmax + 1):
            r = DEG_FUNCS[locus](k)
            rows.append({"locus": locus, "k": k, "codim": r.codim,
                         "degree": r.degree.text()})
    if args.format == "json":
        print(json.dumps(rows))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=["locus", "k", "codim", "degree"])
        writer.writeheader()
        writer.writerows(rows)
        sys.stdout.write(buf.getvalue())
    else:
        widths = {f: max(len(f), *(len(str(r[f])) for r in rows))
                  for f in ("locus", "k", "codim", "degree")}
        header = "  ".join(f.ljust(widths[f]) for f in widths)
        print(header)
        print("-" * len(header))
        for r in rows:
            print("  ".join(str(r[f]).ljust(widths[f]) for f in widths))
    return EXIT_OK


def _cmd_verify(args) -> int:
    try:
        report = verify_all(args.kmax)
    except RingError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        print(json.dumps(report.to_list()))
    else:
        for e in report.entries:
            k = "" if e.k is None else f" k={e.k}"
            line = f"{e.status.upper():7s} {e.check}{k}"
            if e.status != "pass":
                line += f"  expected {e.expected}, got {e.got}"
            print(line)
        n = len(report.entries)
        bad = sum(1 for e in report.entries if e.status == "fail")
        flagged = sum(1 for e in report.entries if e.status == "flagged")
        print(f"{n} checks: {n - bad - flagged} passed, {flagged} flagged, {bad} failed")
    return EXIT_OK if report.ok else EXIT_VERIFY


def _cmd_run(args) -> int:
    try:
        with open(args.script, encoding="utf-8") as fh:
            src = fh.read()
    except OSError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    try:
        prog = parse_program(src)
    except DslSyntaxError as exc:
        print(exc.render(src), file=sys.stderr)
        return EXIT_USAGE
    ctx = _context(args.surface)
    try:
        _, final = run_program(prog, ctx)
    except DslError as exc:
        print(exc.render(src), file=sys.stderr)
        return EXIT_EVAL
    if final is not None:
        print(value_text(final))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="folenum",
                     description="exact degrees of degenerate-singularity "
                                 "loci of plane foliations")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a DSL expression")
    p.add_argument("expression")
    p.add_argument("--surface", choices=["p2", "general"], default="p2")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("locus", help="report one locus M_k / D_k / C_k")
    p.add_argument("locus", choices=["M", "D", "C"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--surface", choices=["p2", "general"], default="p2")
    p.add_argument("--format", choices=["text", "json"], default="json")
    p.set_defaults(func=_cmd_locus)

    p = sub.add_parser("table", help="tabulate locus degrees")
    p.add_argument("--loci", default="M,D,C")
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify", help="run all cross-checks")
    p.add_argument("--kmax", type=int, default=6)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("run", help="execute a .fol script")
    p.add_argument("script")
    p.add_argument("--surface", choices=["p2", "general"], default="p2")
    p.set_defaults(func=_cmd_run)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse --help exits 0; usage errors are mapped to 1
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
