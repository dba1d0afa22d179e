"""Command line front end: count, table, verify, bfile, asym.

Exit codes: 0 ok, 1 verification mismatch, 2 usage, 3 oracle refused, 4 I/O error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .asymptotics import convergence_report, exact_ratio_scaled, first_order_target
from .counts import count_exact
from .oracle import MAX_N, OracleRefused, oracle_count, oracle_count_parallel

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_REFUSED, EXIT_IO = 0, 1, 2, 3, 4
CACHE_ENV = "DCONSEC_CACHE"


class ResultCache:
    """JSON file mapping ``"n:d"`` to the decimal string of a(n, d)."""

    def __init__(self, path: str | os.PathLike | None = None):
        self.path = Path(path) if path else None
        self.values: dict[str, str] = {}
        if self.path and self.path.exists():
            self.values = json.loads(self.path.read_text(encoding="utf-8"))

    @staticmethod
    def key(n: int, d: int) -> str:
        return f"{n}:{d}"

    def get(self, n: int, d: int) -> int | None:
        raw = self.values.get(self.key(n, d))
        return None if raw is None else int(raw)

    def put(self, n: int, d: int, value: int) -> None:
        self.values[self.key(n, d)] = str(value)

    def save(self) -> None:
        if self.path is None:
            return
        self.path.write_text(json.dumps(self.values, indent=1, sort_keys=True) + "\n", encoding="utf-8")


@dataclass
class VerificationReport:
    entries: list[tuple[int, int, int, int, bool]] = field(default_factory=list)

    @property
    def all_match(self) -> bool:
        return all(e[4] for e in self.entries)

    @property
    def mismatches(self):
        return [e for e in self.entries if not e[4]]


def verify_grid(n_max: int, d_max: int, workers: int = 1, force: bool = False) -> VerificationReport:
    """Formula against brute force for 1 <= n <= n_max, 0 <= d <= d_max."""
    if n_max > MAX_N and not force:
        raise OracleRefused(f"n_max={n_max} exceeds the brute-force bound {MAX_N}; pass --force")
    report = VerificationReport()
    for n in range(1, n_max + 1):
        for d in range(0, d_max + 1):
            formula = count_exact(n, d)
            if workers > 1:
                brute = oracle_count_parallel(n, d, split_depth=2, workers=workers, force=force)
            else:
                brute = oracle_count(n, d, force=force)
            report.entries.append((n, d, formula, brute, formula == brute))
    return report


def compute(n: int, d: int, method: str = "auto", force: bool = False,
            cache: ResultCache | None = None) -> int:
    if cache is not None:
        hit = cache.get(n, d)
        if hit is not None:
            return hit
    value = oracle_count(n, d, force=force) if method == "oracle" else count_exact(n, d)
    if cache is not None:
        cache.put(n, d, value)
    return value


def write_bfile(path, d: int, n_max: int) -> None:
    lines = "".join(f"{n} {count_exact(n, d)}\n" for n in range(1, n_max + 1))
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(lines)


def format_table(n_max: int, ds: list[int], fmt: str = "csv", cache: ResultCache | None = None) -> str:
    header = ["n"] + [f"d{d}" for d in ds]
    rows = [[str(n)] + [str(compute(n, d, cache=cache)) for d in ds] for n in range(1, n_max + 1)]
    if fmt == "csv":
        return "".join(",".join(r) + "\n" for r in [header] + rows)
    widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]

    def line(r):
        return "| " + " | ".join(c.rjust(w) for c, w in zip(r, widths)) + " |\n"

    sep = "|" + "|".join("-" * (w + 1) + ":" for w in widths) + "|\n"
    return line(header) + sep + "".join(line(r) for r in rows)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dconsec", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("count", help="print a(n, d)")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--d", type=int, required=True)
    c.add_argument("--method", choices=("formula", "oracle", "auto"), default="auto")
    c.add_argument("--cache", default=os.environ.get(CACHE_ENV))
    c.add_argument("--force", action="store_true", help=f"allow brute force above n={MAX_N}")

    t = sub.add_parser("table", help="rows n = 1..N, one column per d")
    t.add_argument("--n-max", type=int, required=True)
    t.add_argument("--d-list", type=_int_list, required=True)
    t.add_argument("--format", choices=("csv", "markdown"), default="csv")
    t.add_argument("--cache", default=os.environ.get(CACHE_ENV))

    v = sub.add_parser("verify", help="formula against brute force")
    v.add_argument("--n-max", type=int, default=9)
    v.add_argument("--d-max", type=int, default=5)
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--force", action="store_true")

    b = sub.add_parser("bfile", help="write an OEIS b-file")
    b.add_argument("--d", type=int, required=True)
    b.add_argument("--n-max", type=int, required=True)
    b.add_argument("--out", required=True)

    a = sub.add_parser("asym", help="first-order convergence table")
    a.add_argument("--d", type=int, required=True)
    a.add_argument("--n-list", type=_int_list, required=True)
    return p


def _run(args, parser) -> int:
    if args.cmd == "count":
        if args.n < 1 or args.d < 0:
            parser.error("need --n >= 1 and --d >= 0")
        cache = ResultCache(args.cache) if args.cache else None
        try:
            value = compute(args.n, args.d, args.method, args.force, cache)
        except OracleRefused as exc:
            print(f"refused: {exc}", file=sys.stderr)
            return EXIT_REFUSED
        print(value)
        if cache is not None:
            try:
                cache.save()
            except OSError as exc:
                print(f"cannot write cache: {exc}", file=sys.stderr)
                return EXIT_IO
        return EXIT_OK

    if args.cmd == "table":
        if args.n_max < 1 or not args.d_list or min(args.d_list) < 0:
            parser.error("need --n-max >= 1 and non-negative --d-list")
        cache = ResultCache(args.cache) if args.cache else None
        sys.stdout.write(format_table(args.n_max, args.d_list, args.format, cache))
        if cache is not None:
            try:
                cache.save()
            except OSError as exc:
                print(f"cannot write cache: {exc}", file=sys.stderr)
                return EXIT_IO
        return EXIT_OK

    if args.cmd == "verify":
        if args.n_max < 1 or args.d_max < 0 or args.workers < 1:
            parser.error("need --n-max >= 1, --d-max >= 0, --workers >= 1")
        try:
            report = verify_grid(args.n_max, args.d_max, args.workers, args.force)
        except OracleRefused as exc:
            print(f"refused: {exc}", file=sys.stderr)
            return EXIT_REFUSED
        for n, d, f, o, _ in report.mismatches:
            print(f"MISMATCH n={n} d={d} formula={f} oracle={o}")
        status = "all match" if report.all_match else f"{len(report.mismatches)} mismatches"
        print(f"checked {len(report.entries)} cells: {status}")
        return EXIT_OK if report.all_match else EXIT_MISMATCH

    if args.cmd == "bfile":
        if args.n_max < 1 or args.d < 0:
            parser.error("need --n-max >= 1 and --d >= 0")
        try:
            write_bfile(args.out, args.d, args.n_max)
        except OSError as exc:
            print(f"cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_IO
        return EXIT_OK

    if args.cmd == "asym":
        if args.d < 0 or not args.n_list or min(args.n_list) < 1:
            parser.error("need --d >= 0 and positive --n-list")
        target = first_order_target(args.d)
        print("n\tratio_e2\te_n\ttarget\tdistance")
        for n, e_n, dist in convergence_report(args.d, args.n_list):
            scaled = exact_ratio_scaled(n, args.d)
            print(f"{n}\t{scaled.to_string(25)}\t{e_n.to_string(25)}\t{target}\t{dist.to_string(25)}")
        return EXIT_OK

    parser.error(f"unknown command {args.cmd}")  # pragma: no cover


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _run(args, parser)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE


def entry() -> None:
    sys.exit(main())
