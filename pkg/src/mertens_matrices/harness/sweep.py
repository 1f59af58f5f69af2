"""Norm sweeps over n, written as CSV."""
from __future__ import annotations

import csv
import logging
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, fields
from pathlib import Path

import numpy as np

from mertens_matrices.arith import MertensTable, mertens_at, mertens_table
from mertens_matrices.errors import DomainError
from mertens_matrices.matrices import build_M, build_Mtilde, build_T
from mertens_matrices.quotient import build_quotient
from mertens_matrices.spectral import DEFAULT_MAX_ITER, DEFAULT_SEED, DEFAULT_TOL, spectral_norm_symmetric

log = logging.getLogger(__name__)

CI_RANGE = (5000, 100_000, 5000)
FULL_RANGE = (5000, 1_000_000, 5000)
ORDERING_FROM = 5000


@dataclass(frozen=True)
class SweepConfig:
    n_from: int = CI_RANGE[0]
    n_to: int = CI_RANGE[1]
    n_step: int = CI_RANGE[2]
    tol: float = DEFAULT_TOL
    max_iter: int = DEFAULT_MAX_ITER
    seed: int = DEFAULT_SEED
    out: Path | None = None

    def __post_init__(self):
        if min(self.n_from, self.n_step) < 1:
            raise DomainError("n_from and n_step must be >= 1")
        if self.n_from > self.n_to:
            raise DomainError(f"n_from={self.n_from} > n_to={self.n_to}")

    def values(self) -> range:
        return range(self.n_from, self.n_to + 1, self.n_step)


@dataclass(frozen=True)
class SweepRecord:
    n: int
    s: int
    mertens_n: int
    norm_M: float
    norm_Mtilde: float
    norm_T: float
    ratio_M_sqrt: float
    ratio_mertens_sqrt: float
    ratio_M_Mtilde: float
    ratio_T_sqrt: float
    converged: bool

    def problems(self) -> list[str]:
        """Violated record invariants (should always be empty)."""
        out = []
        if abs(self.mertens_n) > self.norm_M + 1e-6:
            out.append(f"|M({self.n})| = {abs(self.mertens_n)} exceeds ||M_n|| = {self.norm_M}")
        if min(self.norm_M, self.norm_Mtilde, self.norm_T) <= 0:
            out.append(f"non-positive norm at n={self.n}")
        return out

    def ordering_holds(self) -> bool:
        return self.norm_T <= self.norm_M <= self.norm_Mtilde


CSV_HEADER = [f.name for f in fields(SweepRecord)]


def compute_record(n: int, mt: MertensTable, tol=DEFAULT_TOL, max_iter=DEFAULT_MAX_ITER, seed=DEFAULT_SEED) -> SweepRecord:
    qs = build_quotient(n)
    results = [
        spectral_norm_symmetric(A, tol=tol, max_iter=max_iter, seed=seed)
        for A in (build_M(qs, mt), build_Mtilde(qs), build_T(qs))
    ]
    norm_M, norm_Mt, norm_T = (r.value for r in results)
    m = mertens_at(mt, n)
    root = math.sqrt(n)
    return SweepRecord(
        n=n,
        s=qs.s,
        mertens_n=m,
        norm_M=norm_M,
        norm_Mtilde=norm_Mt,
        norm_T=norm_T,
        ratio_M_sqrt=norm_M / root,
        ratio_mertens_sqrt=m / root,
        ratio_M_Mtilde=norm_M / norm_Mt,
        ratio_T_sqrt=norm_T / root,
        converged=all(r.converged for r in results),
    )


_worker_table: MertensTable | None = None


def _init_worker(bound: int, prefix: np.ndarray) -> None:
    global _worker_table
    _worker_table = MertensTable(bound, prefix)


def _worker(args) -> SweepRecord:
    n, tol, max_iter, seed = args
    return compute_record(n, _worker_table, tol, max_iter, seed)


def run_sweep(cfg: SweepConfig, workers: int | None = None) -> list[SweepRecord]:
    """Compute one record per n, in ascending order."""
    ns = list(cfg.values())
    mt = mertens_table(cfg.n_to)
    if workers is None:
        workers = os.cpu_count() or 1
    workers = max(1, min(workers, len(ns)))
    if workers == 1:
        return [compute_record(n, mt, cfg.tol, cfg.max_iter, cfg.seed) for n in ns]
    jobs = [(n, cfg.tol, cfg.max_iter, cfg.seed) for n in ns]
    with ProcessPoolExecutor(workers, initializer=_init_worker, initargs=(mt.bound, mt.prefix)) as pool:
        # largest n first keeps the pool busy; map() still yields in input order
        order = sorted(range(len(ns)), key=lambda i: -ns[i])
        done = dict(zip(order, pool.map(_worker, [jobs[i] for i in order])))
    return [done[i] for i in range(len(ns))]


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".12g")
    return str(value)


def write_csv(records: list[SweepRecord], path: str | Path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for rec in records:
            writer.writerow([_fmt(v) for v in astuple(rec)])


def sweep(cfg: SweepConfig, workers: int | None = None) -> list[SweepRecord]:
    """Run the sweep, log invariant and ordering issues, and write ``cfg.out``."""
    records = run_sweep(cfg, workers)
    for rec in records:
        for problem in rec.problems():
            log.error(problem)
        if not rec.converged:
            log.warning("norm iteration did not converge at n=%d", rec.n)
        if rec.n >= ORDERING_FROM and not rec.ordering_holds():
            log.warning(
                "ordering ||T|| <= ||M|| <= ||Mtilde|| fails at n=%d (%.6g, %.6g, %.6g)",
                rec.n, rec.norm_T, rec.norm_M, rec.norm_Mtilde,
            )
    if cfg.out is not None:
        write_csv(records, cfg.out)
    return records


def read_csv(path: str | Path) -> list[dict[str, str]]:
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))
