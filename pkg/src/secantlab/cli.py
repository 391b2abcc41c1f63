"""Command-line front end.

Exit codes: 0 success, 1 golden-suite mismatch, 2 spec parse error,
3 analysis error.
"""

from __future__ import annotations

import argparse
import sys

from .catalog import CATALOG_TEXT, SpecError, parse_spec
from .estimator import SecantAnalyzer
from .polymap import AnalysisError
from .report import format_table, to_json, to_table
from .suites import SUITES, run_suite

EXIT_OK, EXIT_MISMATCH, EXIT_PARSE, EXIT_ANALYSIS = 0, 1, 2, 3


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> int:
    try:
        spec = parse_spec(args.spec)
    except SpecError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    est = SecantAnalyzer(kmax=args.kmax, trials=args.trials, seed=args.seed, exact=args.exact, gamma=args.gamma)
    try:
        report = est.fit(spec).to_report()
    except SpecError as exc:
        print(f"spec error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (AnalysisError, ValueError) as exc:
        print(f"analysis error: {exc}", file=sys.stderr)
        return EXIT_ANALYSIS
    _write(to_table(report) if args.format == "table" else to_json(report), args.out)
    return EXIT_OK


def cmd_reproduce(args) -> int:
    try:
        rows = run_suite(args.suite, seed=args.seed, exact=args.exact)
    except AnalysisError as exc:
        print(f"analysis error: {exc}", file=sys.stderr)
        return EXIT_ANALYSIS
    table = format_table(
        [[row.key, row.expected, row.computed, "ok" if row.ok else "MISMATCH", row.note] for row in rows],
        ["row", "expected", "computed", "status", "note"],
    )
    print(table)
    bad = [row for row in rows if not row.ok]
    if bad:
        print(f"\n{len(bad)} mismatch(es):", file=sys.stderr)
        for row in bad:
            print(f"  {row.key}: expected {row.expected!r}, computed {row.computed!r}", file=sys.stderr)
        return EXIT_MISMATCH
    print(f"\n{args.suite}: all {len(rows)} rows match")
    return EXIT_OK


def cmd_catalog(args) -> int:
    print(format_table([list(row) for row in CATALOG_TEXT], ["spec", "constraints", "dimensions", "chart"]))
    return EXIT_OK


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="secantlab", description="Secant defect ledgers of projective varieties.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="compute the defect ledger and bound verdicts for a variety")
    p.add_argument("spec", help='variety spec, e.g. "segre:3,4" or "scroll:1,1,20|project:2"')
    p.add_argument("--kmax", type=_positive_int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=_positive_int, default=3)
    p.add_argument("--exact", action="store_true", help="rational arithmetic instead of prime fields")
    p.add_argument("--gamma", action=argparse.BooleanOptionalAction, default=True, help="contact-locus pass")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    fmt.add_argument("--table", dest="format", action="store_const", const="table")
    p.add_argument("--out", default=None, help="write to PATH instead of stdout")
    p.set_defaults(func=cmd_analyze, format="json")

    p = sub.add_parser("reproduce", help="run a golden suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exact", action="store_true")
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("catalog", help="list the variety families")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
