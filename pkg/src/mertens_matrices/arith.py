"""Möbius function and Mertens prefix sums over 1..N."""
from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from mertens_matrices.errors import BoundError, RangeError
from mertens_matrices.kernels import mobius_values

DEFAULT_SIEVE_CAP = 10**8
SIEVE_CAP_ENV = "MERTENS_SIEVE_CAP"


def sieve_cap() -> int:
    """Largest sieve bound allowed; overridable through ``MERTENS_SIEVE_CAP``."""
    raw = os.environ.get(SIEVE_CAP_ENV)
    if raw is None:
        return DEFAULT_SIEVE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise BoundError(f"{SIEVE_CAP_ENV}={raw!r} is not an integer") from None
    if cap < 1:
        raise BoundError(f"{SIEVE_CAP_ENV} must be positive, got {cap}")
    return cap


@dataclass(frozen=True, eq=False)
class MobiusTable:
    """μ(k) for 1 ≤ k ≤ bound; ``values[0]`` is an unused 0."""

    bound: int
    values: np.ndarray

    def __getitem__(self, k: int) -> int:
        if not 1 <= k <= self.bound:
            raise RangeError(f"mu({k}) outside table bound {self.bound}")
        return int(self.values[k])


@dataclass(frozen=True, eq=False)
class MertensTable:
    """M(k) for 0 ≤ k ≤ bound, with M(0) = 0."""

    bound: int
    prefix: np.ndarray

    def __getitem__(self, k: int) -> int:
        return mertens_at(self, k)


def mobius_sieve(N: int, cap: int | None = None) -> MobiusTable:
    if cap is None:
        cap = sieve_cap()
    if N < 1:
        raise BoundError(f"sieve bound must be >= 1, got {N}")
    if N > cap:
        raise BoundError(f"sieve bound {N} exceeds cap {cap} (set {SIEVE_CAP_ENV} to raise it)")
    values = mobius_values(int(N))
    values.setflags(write=False)
    return MobiusTable(int(N), values)


def mertens_prefix(mob: MobiusTable) -> MertensTable:
    prefix = np.cumsum(mob.values, dtype=np.int64)
    prefix.setflags(write=False)
    return MertensTable(mob.bound, prefix)


def mertens_table(N: int, cap: int | None = None) -> MertensTable:
    """Shortcut for ``mertens_prefix(mobius_sieve(N))``."""
    return mertens_prefix(mobius_sieve(N, cap))


def mertens_at(mt: MertensTable, k: int) -> int:
    if k < 0 or k > mt.bound:
        raise RangeError(f"M({k}) outside table bound {mt.bound}")
    return int(mt.prefix[k])
