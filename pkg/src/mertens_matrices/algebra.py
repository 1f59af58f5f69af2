"""The quotient algebra over a floor-quotient structure.

Basis elements are the representatives in ``qs.reps``; the product of two
basis elements is the class of their integer product, or zero when that
product exceeds n (the unbounded class is sent to 0). Vectors and matrices
are indexed by 0-based positions into ``qs.reps``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from mertens_matrices.errors import DomainError, StructureError
from mertens_matrices.quotient import QuotientStructure


def product(qs: QuotientStructure, i: int, j: int) -> int | None:
    """Class of i*j for representatives i, j; None stands for zero."""
    if i not in qs or j not in qs:
        raise DomainError(f"({i}, {j}) are not both representatives for n={qs.n}")
    n = qs.n
    if i > n // j:
        return None
    return n // (n // (i * j))


def product_positions(qs: QuotientStructure) -> np.ndarray:
    """s x s table of positions of reps[p]*reps[q]; -1 where the product is zero."""
    cached = qs.__dict__.get("_product_positions")
    if cached is not None:
        return cached
    n, s, reps = qs.n, qs.s, qs.reps
    p = np.arange(s)
    # reps[p]*reps[q] <= n exactly when p + q <= s - 1
    live = p[:, None] + p[None, :] <= s - 1
    # n // (i*j) == (n // i) // j, so no product is ever formed
    quot = (n // reps)[:, None] // reps[None, :]
    cls = np.where(live, n // np.maximum(quot, 1), 0)
    pos = np.where(cls <= qs.root, cls - 1, s - quot)
    table = np.where(live, pos, -1)
    table.setflags(write=False)
    qs.__dict__["_product_positions"] = table
    return table


def multiplication_table(qs: QuotientStructure) -> list[list[int | None]]:
    table = product_positions(qs)
    reps = [int(k) for k in qs.reps]
    return [[reps[c] if c >= 0 else None for c in row] for row in table.tolist()]


@dataclass(frozen=True, eq=False)
class AlgebraVector:
    """Integer coefficients over the basis ``qs.reps``."""

    qs: QuotientStructure
    coeffs: np.ndarray

    def __post_init__(self):
        coeffs = np.asarray(self.coeffs, dtype=np.int64)
        if coeffs.shape != (self.qs.s,):
            raise StructureError(f"expected {self.qs.s} coefficients, got shape {coeffs.shape}")
        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)

    def _check(self, other: AlgebraVector) -> None:
        if not isinstance(other, AlgebraVector):
            raise TypeError(f"expected AlgebraVector, got {type(other).__name__}")
        if other.qs is not self.qs and other.qs.n != self.qs.n:
            raise StructureError(f"vectors for n={self.qs.n} and n={other.qs.n}")

    def __add__(self, other: AlgebraVector) -> AlgebraVector:
        self._check(other)
        return AlgebraVector(self.qs, self.coeffs + other.coeffs)

    def __sub__(self, other: AlgebraVector) -> AlgebraVector:
        self._check(other)
        return AlgebraVector(self.qs, self.coeffs - other.coeffs)

    def __mul__(self, other: AlgebraVector) -> AlgebraVector:
        return convolve(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraVector):
            return NotImplemented
        return self.qs.n == other.qs.n and np.array_equal(self.coeffs, other.coeffs)

    def __repr__(self) -> str:
        return f"AlgebraVector(n={self.qs.n}, coeffs={self.coeffs.tolist()})"


def basis(qs: QuotientStructure, k: int) -> AlgebraVector:
    """The basis vector of the representative k."""
    if k not in qs:
        raise DomainError(f"{k} is not a class representative for n={qs.n}")
    coeffs = np.zeros(qs.s, dtype=np.int64)
    coeffs[qs.position(k)] = 1
    return AlgebraVector(qs, coeffs)


def unit(qs: QuotientStructure) -> AlgebraVector:
    return basis(qs, 1)


def project_sequence(qs: QuotientStructure, prefix: Callable[[int], int]) -> AlgebraVector:
    """Image of the sequence whose prefix sums are ``prefix``.

    Each class (k^-, k] contributes ``prefix(k) - prefix(k^-)``, with the
    predecessor of 1 taken as 0.
    """
    values = np.array([prefix(0)] + [prefix(int(k)) for k in qs.reps], dtype=np.int64)
    return AlgebraVector(qs, np.diff(values))


def convolve(a: AlgebraVector, b: AlgebraVector) -> AlgebraVector:
    a._check(b)
    table = product_positions(a.qs)
    live = table >= 0
    terms = np.outer(a.coeffs, b.coeffs)[live]
    out = np.zeros(a.qs.s, dtype=np.int64)
    np.add.at(out, table[live], terms)
    return AlgebraVector(a.qs, out)


def regular_rep(a: AlgebraVector) -> np.ndarray:
    """Matrix of x -> a*x; column q holds the coefficients of a * reps[q]."""
    s = a.qs.s
    table = product_positions(a.qs)
    rows, cols = np.nonzero(table >= 0)
    out = np.zeros((s, s), dtype=np.int64)
    np.add.at(out, (table[rows, cols], cols), a.coeffs[rows])
    return out
