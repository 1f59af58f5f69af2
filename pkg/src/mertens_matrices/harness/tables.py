"""Plain-text dumps of the worked tables for a small n."""
from __future__ import annotations

from typing import Sequence

import numpy as np

from mertens_matrices.algebra import basis, multiplication_table, regular_rep
from mertens_matrices.arith import mertens_table
from mertens_matrices.errors import DomainError
from mertens_matrices.matrices import build_T, mobius_vector, unit_sum_vector
from mertens_matrices.quotient import QuotientStructure, build_quotient

MAX_TABLE_N = 10**4
INFINITY_LABEL = "inf"


def format_grid(title: str, row_labels: Sequence[str], col_labels: Sequence[str], cells) -> str:
    """Right-aligned grid with a label column and a header row."""
    cells = [[str(c) for c in row] for row in cells]
    width = max(len(x) for x in [*col_labels, *(c for row in cells for c in row)])
    lw = max(len(x) for x in row_labels)
    lines = [title]
    lines.append(" " * lw + " |" + "".join(f" {c:>{width}}" for c in col_labels))
    lines.append("-" * lw + "-+" + "-" * ((width + 1) * len(col_labels)))
    for label, row in zip(row_labels, cells):
        lines.append(f"{label:>{lw}} |" + "".join(f" {c:>{width}}" for c in row))
    return "\n".join(lines)


def format_matrix(title: str, qs: QuotientStructure, A: np.ndarray) -> str:
    labels = [str(int(k)) for k in qs.reps]
    return format_grid(title, labels, labels, A.tolist())


def monoid_table(qs: QuotientStructure) -> list[list[str]]:
    """Products of classes including the unbounded one, as labels."""
    inner = multiplication_table(qs)
    rows = [[str(c) if c is not None else INFINITY_LABEL for c in row] + [INFINITY_LABEL] for row in inner]
    rows.append([INFINITY_LABEL] * (qs.s + 1))
    return rows


def dump_tables(n: int) -> str:
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if n > MAX_TABLE_N:
        raise DomainError(f"tables are only printed for n <= {MAX_TABLE_N}, got {n}")
    qs = build_quotient(n)
    mt = mertens_table(n)
    labels = [str(int(k)) for k in qs.reps]
    T = build_T(qs)
    u = unit_sum_vector(qs)
    mu = mobius_vector(qs, mt)

    blocks = [f"n = {n}\ns = {qs.s}\nS = {' '.join(labels)}"]
    with_inf = labels + [INFINITY_LABEL]
    blocks.append(format_grid("monoid table", with_inf, with_inf, monoid_table(qs)))
    algebra = [[c if c is not None else 0 for c in row] for row in multiplication_table(qs)]
    blocks.append(format_grid("algebra table", labels, labels, algebra))
    reps_basis = {k: regular_rep(basis(qs, int(k))) for k in qs.reps}
    for k, R in reps_basis.items():
        blocks.append(format_matrix(f"rho({k})", qs, R))
    blocks.append(
        f"u = {' '.join(map(str, u.coeffs.tolist()))}\n"
        f"mu = {' '.join(map(str, mu.coeffs.tolist()))}"
    )
    blocks.append(format_matrix("rho(u)", qs, regular_rep(u)))
    blocks.append(format_matrix("rho(mu)", qs, regular_rep(mu)))
    blocks.append(format_matrix("T", qs, T))
    for k, R in reps_basis.items():
        blocks.append(format_matrix(f"T rho({k})", qs, T @ R))
    blocks.append(format_matrix("T rho(u)", qs, T @ regular_rep(u)))
    blocks.append(format_matrix("T rho(mu)", qs, T @ regular_rep(mu)))
    return "\n\n".join(blocks) + "\n"
