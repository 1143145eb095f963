"""
Command-line front end.

    unimodal c-values --max 10
    unimodal table --n 5 --q --check
    unimodal series --kind no-k-cycle --k 1 --degree 12
    unimodal verify --n-max 8 --suite all --format json

Exit status: 0 on success, 1 when a verification check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys

from . import oracle
from .report import Check, ReportDocument, series_json, write_atomic
from .theorems import (
    c_value, no_k_cycle_series, order_divides_series, theorem1_series,
    theoremq_series, u_table,
)
from .verify import SUITES, run_suites

MAX_C = 64
MAX_TABLE = 16
MAX_PARTITION_SERIES = 16
MAX_T_SERIES = 512


class UsageError(Exception):
    pass


def cmd_c_values(max_n: int) -> ReportDocument:
    if not 1 <= max_n <= MAX_C:
        raise UsageError(f"--max must be in 1..{MAX_C}")
    rows = [{"n": n, "c": str(c_value(n))} for n in range(1, max_n + 1)]
    return ReportDocument("c-values", {"max": max_n}, rows)


def cmd_table(n: int, with_q: bool = False, check: bool = False) -> ReportDocument:
    if not 1 <= n <= MAX_TABLE:
        raise UsageError(f"--n must be in 1..{MAX_TABLE}")
    table = u_table(n)
    rows = []
    for alpha, count, poly in table.rows():
        row = {"cycle_type": list(alpha), "u": str(count)}
        if with_q:
            row["q"] = [str(c) for c in poly.int_coeffs(n)]
        rows.append(row)
    doc = ReportDocument("table", {"n": n, "q": with_q, "check": check}, rows,
                         extra={"total": str(table.total())})
    if check:
        brute = oracle.tabulate(n)
        mismatch = [list(a) for a, _, _ in table.rows()
                    if (table.count(a), table.q_refinement(a))
                    != (brute.count(a), brute.q_refinement(a))]
        doc.checks.append(Check("table", f"oracle tally agrees n={n}", not mismatch,
                                counterexample={"partitions": mismatch} if mismatch else None))
    return doc


SERIES_KINDS = ("theorem1", "theoremq", "no-k-cycle", "order")


def cmd_series(kind: str, degree: int, k: int | None = None,
               m: int | None = None) -> ReportDocument:
    if kind not in SERIES_KINDS:
        raise UsageError(f"unknown series kind {kind!r}; choose from {', '.join(SERIES_KINDS)}")
    if kind in ("theorem1", "theoremq"):
        if not 1 <= degree <= MAX_PARTITION_SERIES:
            raise UsageError(f"--degree must be in 1..{MAX_PARTITION_SERIES} for {kind}")
        series = theorem1_series(degree) if kind == "theorem1" else theoremq_series(degree)
        return ReportDocument("series", {"kind": kind, "degree": degree},
                              series_json(series))
    if not 1 <= degree <= MAX_T_SERIES:
        raise UsageError(f"--degree must be in 1..{MAX_T_SERIES}")
    if kind == "no-k-cycle":
        if k is None or k < 1:
            raise UsageError("no-k-cycle needs --k >= 1")
        poly, params = no_k_cycle_series(k, degree), {"kind": kind, "degree": degree, "k": k}
    else:
        if m is None or m < 1:
            raise UsageError("order needs --m >= 1")
        poly, params = order_divides_series(m, degree), {"kind": kind, "degree": degree, "m": m}
    values = poly.int_coeffs(degree + 1)
    rows = [{"n": n, "count": str(values[n])} for n in range(1, degree + 1)]
    return ReportDocument("series", params, rows)


def cmd_verify(n_max: int, suites: list[str]) -> ReportDocument:
    if n_max < 1:
        raise UsageError("--n-max must be >= 1")
    chosen = list(SUITES) if not suites or "all" in suites else suites
    unknown = [s for s in chosen if s not in SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s): {', '.join(unknown)}")
    checks, notes, sizes = run_suites(n_max, chosen)
    doc = ReportDocument("verify", {"n_max": n_max, "suites": [s for s in SUITES if s in chosen]},
                         extra={"effective_n_max": sizes}, checks=checks, notes=notes)
    return doc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default=argparse.SUPPRESS)
    common.add_argument("--output", metavar="FILE", default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="unimodal",
        description="Exact enumeration of unimodal permutations by cycle type.")
    parser.add_argument("--format", choices=("json", "csv", "text"), default="text")
    parser.add_argument("--output", metavar="FILE", default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("c-values", parents=[common], help="transitive counts c_1..c_N")
    p.add_argument("--max", type=int, required=True, dest="max_n")

    p = sub.add_parser("table", parents=[common], help="u_alpha for every cycle type of n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", action="store_true", help="include the q-refinement")
    p.add_argument("--check", action="store_true", help="compare with brute force")

    p = sub.add_parser("series", parents=[common], help="generating-function expansions")
    p.add_argument("--kind", required=True, choices=SERIES_KINDS)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)

    p = sub.add_parser("verify", parents=[common], help="run cross-verification suites")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--suite", action="append", default=[],
                   choices=[*SUITES, "all"], help="repeatable; default all")
    return parser


def run(argv: list[str] | None = None) -> tuple[ReportDocument, argparse.Namespace]:
    args = build_parser().parse_args(argv)
    if args.command == "c-values":
        doc = cmd_c_values(args.max_n)
    elif args.command == "table":
        doc = cmd_table(args.n, args.q, args.check)
    elif args.command == "series":
        doc = cmd_series(args.kind, args.degree, args.k, args.m)
    else:
        doc = cmd_verify(args.n_max, args.suite)
    return doc, args


def main(argv: list[str] | None = None) -> int:
    try:
        doc, args = run(argv)
    except UsageError as err:
        print(f"unimodal: error: {err}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # argparse usage errors
        return int(exc.code or 0)
    text = doc.render(args.format)
    if args.output:
        write_atomic(args.output, text)
    else:
        sys.stdout.write(text)
    return 0 if doc.passed else 1


if __name__ == "__main__":
    sys.exit(main())
