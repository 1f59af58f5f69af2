"""Command-line entry point.

Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.
"""
from __future__ import annotations

import argparse
import csv
import io
import logging
import sys
from pathlib import Path

import numpy as np

from mertens_matrices.arith import mertens_table
from mertens_matrices.errors import BoundError, DomainError, RangeError
from mertens_matrices.harness.plot import ColumnError, render_plot
from mertens_matrices.harness.sweep import CI_RANGE, FULL_RANGE, SweepConfig, sweep
from mertens_matrices.harness.tables import dump_tables, format_matrix
from mertens_matrices.harness.verify import verify_suite
from mertens_matrices.matrices import build_M, build_Mtilde, build_T, build_U, build_Utilde
from mertens_matrices.quotient import build_quotient
from mertens_matrices.spectral import DEFAULT_SEED, DEFAULT_TOL

EXIT_OK, EXIT_VERIFY, EXIT_USAGE = 0, 1, 2

MATRIX_KINDS = ("T", "U", "M", "Utilde", "Mtilde")


def build_matrix(n: int, kind: str) -> np.ndarray:
    qs = build_quotient(n)
    if kind == "T":
        return build_T(qs)
    if kind == "U":
        return build_U(qs)
    if kind == "M":
        return build_M(qs, mertens_table(n))
    if kind == "Utilde":
        return build_Utilde(qs)
    if kind == "Mtilde":
        return build_Mtilde(qs)
    raise DomainError(f"unknown matrix kind {kind!r}")


def matrix_csv(A: np.ndarray) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in A.tolist():
        writer.writerow([repr(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_tables(args) -> int:
    sys.stdout.write(dump_tables(args.n))
    return EXIT_OK


def cmd_matrix(args) -> int:
    A = build_matrix(args.n, args.kind)
    if args.format == "csv":
        text = matrix_csv(A)
    else:
        if A.dtype.kind == "f":
            A = np.array([[f"{v:.6g}" for v in row] for row in A.tolist()])
        text = format_matrix(f"{args.kind} (n={args.n})", build_quotient(args.n), A) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify_suite(args.n_max)
    print(report.summary())
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_sweep(args) -> int:
    lo, hi, step = FULL_RANGE if args.full else (args.n_from, args.n_to, args.n_step)
    cfg = SweepConfig(lo, hi, step, tol=args.tol, seed=args.seed, out=Path(args.out))
    records = sweep(cfg, workers=args.workers)
    print(f"wrote {len(records)} rows to {args.out}")
    return EXIT_OK


def cmd_plot(args) -> int:
    columns = [c.strip() for c in args.columns.split(",") if c.strip()]
    path = render_plot(args.inp, columns, args.out, normalize_at=args.normalize_at, title=args.title)
    print(f"wrote {path}")
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mertens-matrices", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tables", help="print the worked tables for a small n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("matrix", help="emit one of T/U/M/Utilde/Mtilde")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=MATRIX_KINDS, required=True)
    p.add_argument("--format", choices=("csv", "text"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("verify", help="run every identity check for n <= n-max")
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="compute norms over a range of n and write CSV")
    p.add_argument("--from", dest="n_from", type=int, default=CI_RANGE[0])
    p.add_argument("--to", dest="n_to", type=int, default=CI_RANGE[1])
    p.add_argument("--step", dest="n_step", type=int, default=CI_RANGE[2])
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--out", required=True)
    p.add_argument("--full", action="store_true", help=f"sweep {FULL_RANGE[0]}..{FULL_RANGE[1]} step {FULL_RANGE[2]}")
    p.add_argument("--workers", type=int, default=None, help="worker processes (default: CPU count)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("plot", help="render sweep columns as SVG")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--columns", required=True, help="comma-separated column names")
    p.add_argument("--normalize-at", type=int)
    p.add_argument("--title")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except (DomainError, BoundError, RangeError, ColumnError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
