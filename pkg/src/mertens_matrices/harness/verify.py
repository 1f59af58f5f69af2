"""Exhaustive identity checks for every n up to a bound."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from mertens_matrices.algebra import AlgebraVector, product_positions, regular_rep, unit
from mertens_matrices.arith import MertensTable, mertens_table
from mertens_matrices.errors import DomainError
from mertens_matrices.matrices import build_M, build_T, mobius_vector, unit_sum_vector, verify_TUT
from mertens_matrices.quotient import QuotientStructure, build_quotient, cardinality_formula
from mertens_matrices.spectral import spectral_norm_symmetric

BRACKET_RTOL = 1e-9

CHECKS = (
    "involution",
    "cardinality",
    "floor_composition",
    "morphism",
    "unit_inverse",
    "TM_symmetry",
    "TUT",
    "bracketing",
)


def floor_pairs(n: int) -> tuple[np.ndarray, np.ndarray]:
    """All (i, j) with i*j <= n, as two flat arrays."""
    i = np.arange(1, n + 1, dtype=np.int64)
    counts = n // i
    starts = np.cumsum(counts) - counts
    total = int(counts.sum())
    ii = np.repeat(i, counts)
    jj = np.arange(total, dtype=np.int64) - np.repeat(starts, counts) + 1
    return ii, jj


def check_involution(qs: QuotientStructure, mt: MertensTable) -> str | None:
    images = qs.n // qs.reps
    if not np.array_equal(images, qs.reps[::-1]):
        p = int(np.flatnonzero(images != qs.reps[::-1])[0])
        return f"n // {qs.reps[p]} = {images[p]}, expected {qs.reps[::-1][p]}"
    if not np.array_equal(qs.n // images, qs.reps):
        return "k -> n // k is not an involution"
    return None


def check_cardinality(qs: QuotientStructure, mt: MertensTable) -> str | None:
    expected = cardinality_formula(qs.n)
    return None if qs.s == expected else f"s = {qs.s}, formula gives {expected}"


def check_floor_composition(qs: QuotientStructure, mt: MertensTable) -> str | None:
    i, j = floor_pairs(qs.n)
    bad = np.flatnonzero((qs.n // i) // j != qs.n // (i * j))
    return None if len(bad) == 0 else f"i={i[bad[0]]}, j={j[bad[0]]}"


def check_morphism(qs: QuotientStructure, mt: MertensTable) -> str | None:
    rng = np.random.default_rng(qs.n)
    a = AlgebraVector(qs, rng.integers(-3, 4, qs.s))
    b = AlgebraVector(qs, rng.integers(-3, 4, qs.s))
    if not np.array_equal(regular_rep(a * b), regular_rep(a) @ regular_rep(b)):
        return f"rho(a*b) != rho(a) rho(b) for a={a.coeffs.tolist()}, b={b.coeffs.tolist()}"
    return None


def check_unit_inverse(qs: QuotientStructure, mt: MertensTable) -> str | None:
    u, mu = unit_sum_vector(qs), mobius_vector(qs, mt)
    if u * mu != unit(qs):
        return f"u * mu = {(u * mu).coeffs.tolist()}"
    if not np.array_equal(regular_rep(u) @ regular_rep(mu), np.eye(qs.s, dtype=np.int64)):
        return "rho(u) rho(mu) != I"
    return None


def check_TM_symmetry(qs: QuotientStructure, mt: MertensTable) -> str | None:
    # column q of rho(k) is the basis vector at table[k, q] (or zero), so
    # (T rho(k))[i, q] = T[i, table[k, q]]
    T = build_T(qs)
    table = product_positions(qs)
    stack = np.where(table[None, :, :] >= 0, T[:, np.maximum(table, 0)], 0)  # [i, k, q]
    if not np.array_equal(stack, stack.transpose(2, 1, 0)):
        k = int(np.flatnonzero((stack != stack.transpose(2, 1, 0)).any(axis=(0, 2)))[0])
        return f"T rho({qs.reps[k]}) is not symmetric"
    return None


def check_TUT(qs: QuotientStructure, mt: MertensTable) -> str | None:
    result = verify_TUT(qs, mt)
    return None if result.ok else f"U X != I at {result.mismatch}"


def bracket_problem(A: np.ndarray, value: float, rtol: float = BRACKET_RTOL) -> str | None:
    """None when max|a| <= value <= s * max|a| within rtol."""
    top = float(np.abs(A).max())
    s = A.shape[0]
    if value < top * (1 - rtol):
        return f"norm {value!r} below max entry {top}"
    if value > s * top * (1 + rtol):
        return f"norm {value!r} above s * max entry {s * top}"
    return None


def check_bracketing(qs: QuotientStructure, mt: MertensTable) -> str | None:
    for name, A in (("T", build_T(qs)), ("M", build_M(qs, mt))):
        if not A.any():
            continue
        problem = bracket_problem(A, spectral_norm_symmetric(A).value)
        if problem:
            return f"{name}: {problem}"
    return None


_CHECK_FUNCS: dict[str, Callable[[QuotientStructure, MertensTable], str | None]] = {
    "involution": check_involution,
    "cardinality": check_cardinality,
    "floor_composition": check_floor_composition,
    "morphism": check_morphism,
    "unit_inverse": check_unit_inverse,
    "TM_symmetry": check_TM_symmetry,
    "TUT": check_TUT,
    "bracketing": check_bracketing,
}


@dataclass
class VerifyReport:
    n_max: int
    passed: dict[str, int] = field(default_factory=lambda: dict.fromkeys(CHECKS, 0))
    failed: dict[str, int] = field(default_factory=lambda: dict.fromkeys(CHECKS, 0))
    first_failure: dict[str, tuple[int, str]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not any(self.failed.values())

    def summary(self) -> str:
        lines = [f"verify n <= {self.n_max}"]
        for name in CHECKS:
            status = "PASS" if self.failed[name] == 0 else "FAIL"
            line = f"  {name:<13} {status}  {self.passed[name]} passed, {self.failed[name]} failed"
            if name in self.first_failure:
                n, detail = self.first_failure[name]
                line += f"  (first counterexample n={n}: {detail})"
            lines.append(line)
        lines.append("all checks passed" if self.ok else "verification FAILED")
        return "\n".join(lines)


def verify_suite(n_max: int, checks=CHECKS) -> VerifyReport:
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    mt = mertens_table(n_max)
    report = VerifyReport(n_max)
    for n in range(1, n_max + 1):
        qs = build_quotient(n)
        for name in checks:
            problem = _CHECK_FUNCS[name](qs, mt)
            if problem is None:
                report.passed[name] += 1
            else:
                report.failed[name] += 1
                report.first_failure.setdefault(name, (n, problem))
    return report
