"""Command-line front end.

    knotpoly compute --braid "1 1 1" [--n 2] [--format json|csv|text]
    knotpoly table --file knots.tsv [--format json|csv|text]
    knotpoly verify --suite markov|skein|interpolation|all [--nmax] [--lenmax] [--trials] [--seed]

Exit codes: 0 success, 1 verification failure, 2 argument/parse error,
3 I/O error.  ``KNOTPOLY_THREADS`` caps the number of worker threads used for
table rows.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from importlib import resources

from .braidword import ParseError, RowError, closure_components, parse_braid, read_table, writhe
from .invariants import InvariantReport, compute_report
from .suites import SUITES, run_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_IO = 3

CSV_FIELDS = (
    "name", "n", "word", "writhe", "components",
    "omega_closed", "omega_open", "jones", "alexander", "checks_ok",
)


def worker_count() -> int:
    raw = os.environ.get("KNOTPOLY_THREADS", "")
    try:
        cap = int(raw)
    except ValueError:
        cap = 0
    if cap < 1:
        cap = os.cpu_count() or 1
    return max(1, cap)


def bundled_table_path() -> str:
    return str(resources.files("knotpoly") / "data" / "knots.tsv")


def _csv_row(report: InvariantReport) -> list[str]:
    b = report.braid
    return [
        report.name, str(b.n), b.text(), str(writhe(b)), str(closure_components(b)),
        json.dumps(report.omega_closed.to_json(), separators=(",", ":")),
        json.dumps(report.omega_open.to_json(), separators=(",", ":")),
        json.dumps(report.jones_normalised.to_json(), separators=(",", ":")),
        json.dumps(report.alexander.to_json(), separators=(",", ":")),
        "true" if report.ok else "false",
    ]


def format_text(report: InvariantReport) -> str:
    b = report.braid
    lines = [
        f"{report.name or 'braid'}: n={b.n} word=[{b.text()}] writhe={writhe(b)} "
        f"components={closure_components(b)}",
        f"  omega_closed = {report.omega_closed}",
        f"  omega_open   = {report.omega_open}",
        f"  jones        = {report.jones_normalised}",
        f"  alexander    = {report.alexander}",
    ]
    for name, ok, detail in report.checks:
        lines.append(f"  [{'ok' if ok else 'FAIL'}] {name}" + ("" if ok else f": {detail}"))
    return "\n".join(lines)


class ReportWriter:
    def __init__(self, fmt: str, out):
        self.fmt = fmt
        self.out = out
        self._csv = None
        if fmt == "csv":
            self._csv = csv.writer(out, lineterminator="\n")
            self._csv.writerow(CSV_FIELDS)

    def write(self, report: InvariantReport) -> None:
        if self.fmt == "json":
            self.out.write(json.dumps(report.to_json(), separators=(",", ":")) + "\n")
        elif self.fmt == "csv":
            self._csv.writerow(_csv_row(report))
        else:
            self.out.write(format_text(report) + "\n")


def cmd_compute(args, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    try:
        braid = parse_braid(args.braid, args.n)
    except ParseError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    report = compute_report(braid, name=args.name or "")
    ReportWriter(args.format, out).write(report)
    return EXIT_OK


def cmd_table(args, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    path = args.file or bundled_table_path()
    try:
        with open(path, encoding="utf-8", newline="") as fh:
            rows = list(read_table(fh))
    except OSError as exc:
        err.write(f"error: cannot read {path}: {exc}\n")
        return EXIT_IO
    except ParseError as exc:
        err.write(f"error: {path}: {exc}\n")
        return EXIT_USAGE

    entries = [r for r in rows if not isinstance(r, RowError)]
    with ThreadPoolExecutor(max_workers=worker_count()) as pool:
        reports = iter(list(pool.map(lambda e: compute_report(e.braid(), e.name), entries)))

    writer = ReportWriter(args.format, out)
    status = EXIT_OK
    for row in rows:
        if isinstance(row, RowError):
            err.write(f"row {row.line}: {row.message}: {row.text!r}\n")
            status = EXIT_FAIL
            continue
        report = next(reports)
        writer.write(report)
        if not report.ok:
            status = EXIT_FAIL
    return status


def cmd_verify(args, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    names = SUITES if args.suite == "all" else (args.suite,)
    status = EXIT_OK
    for name in names:
        result = run_suite(name, args.nmax, args.lenmax, args.trials, args.seed)
        out.write(result.summary() + "\n")
        for failure in result.failures[:5]:
            out.write(f"  counterexample: {failure}\n")
        if not result.ok:
            status = EXIT_FAIL
    return status


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _nonnegative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotpoly",
        description="Graded-intersection link invariants of braid closures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    formats = ("json", "csv", "text")

    p = sub.add_parser("compute", help="invariants of one braid word")
    p.add_argument("--braid", required=True, help='whitespace-separated letters, e.g. "1 1 1"')
    p.add_argument("--n", type=_positive, default=None, help="strand count (default 1 + max |letter|)")
    p.add_argument("--name", default="", help="label for the report")
    p.add_argument("--format", choices=formats, default="json")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("table", help="invariants for every row of a TSV knot table")
    p.add_argument("--file", default=None, help="TSV with header name<TAB>n<TAB>word (default: bundled table)")
    p.add_argument("--format", choices=formats, default="json")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="randomized invariance and identity suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--nmax", type=_positive, default=4)
    p.add_argument("--lenmax", type=_nonnegative, default=8)
    p.add_argument("--trials", type=_nonnegative, default=50)
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None, err=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, out, err)


if __name__ == "__main__":
    sys.exit(main())
