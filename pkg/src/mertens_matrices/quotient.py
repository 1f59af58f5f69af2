"""Floor-quotient classes for a fixed n.

Two positive integers i, j are equivalent when ``n // i == n // j``. Every
class with elements ≤ n is an interval and is named by its largest element;
those names form the sorted set ``reps``. All integers above n make up one
unbounded class, which functions here report as ``None``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from mertens_matrices.errors import DomainError


@dataclass(frozen=True, eq=False)
class QuotientStructure:
    """Class representatives for one n.

    ``reps`` is an increasing int64 array; positions are 0-based, so
    ``reps[0] == 1`` and ``reps[s - 1] == n``.
    """

    n: int
    reps: np.ndarray

    @property
    def s(self) -> int:
        return len(self.reps)

    @cached_property
    def root(self) -> int:
        return math.isqrt(self.n)

    @cached_property
    def index_of(self) -> dict[int, int]:
        return {int(k): p for p, k in enumerate(self.reps)}

    def position(self, k: int) -> int:
        """0-based position of the representative k (no membership check)."""
        return k - 1 if k <= self.root else self.s - self.n // k

    def __contains__(self, k: object) -> bool:
        if not isinstance(k, (int, np.integer)) or not 1 <= k <= self.n:
            return False
        return self.n // (self.n // k) == k

    def __repr__(self) -> str:
        return f"QuotientStructure(n={self.n}, s={self.s})"


def build_quotient(n: int) -> QuotientStructure:
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    r = math.isqrt(n)
    low = np.arange(1, r + 1, dtype=np.int64)
    high = n // low[::-1]
    if high[0] == r:
        # n < r*r + r: [sqrt n] is its own image
        high = high[1:]
    reps = np.concatenate([low, high])
    reps.setflags(write=False)
    return QuotientStructure(n, reps)


def bar(qs: QuotientStructure, k: int) -> int:
    """The order-reversing involution k -> n // k on reps."""
    if k not in qs:
        raise DomainError(f"{k} is not a class representative for n={qs.n}")
    return qs.n // k


def class_rep(qs: QuotientStructure, m: int) -> int | None:
    """Largest element of m's class, or None for the unbounded class."""
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    if m > qs.n:
        return None
    return qs.n // (qs.n // m)


def cardinality_formula(n: int) -> int:
    """[sqrt n] + [sqrt(n + 1/4) - 1/2], in exact integer arithmetic.

    The second term is the largest t with t(t + 1) <= n, i.e. with
    (2t + 1)^2 <= 4n + 1.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return math.isqrt(n) + (math.isqrt(4 * n + 1) - 1) // 2


def gap_ratio_max(qs: QuotientStructure) -> Fraction:
    """Largest ratio of consecutive representatives, exactly."""
    if qs.s < 2:
        raise DomainError("gap ratio needs at least two representatives")
    ratios = qs.reps[1:] / qs.reps[:-1]
    near = np.flatnonzero(ratios >= ratios.max() * (1 - 1e-9))
    return max(Fraction(int(qs.reps[p + 1]), int(qs.reps[p])) for p in near)


def below_proved_gap_bound(ratio: Fraction) -> bool:
    """Exact test of ratio <= 4 + 2*sqrt(2)."""
    if ratio <= 4:
        return True
    return (ratio - 4) ** 2 <= 8
