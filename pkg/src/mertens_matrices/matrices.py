"""The matrices T, U, M and their floor-free analogues.

Integer matrices are int64 arrays, real ones float64, all indexed by
0-based positions into ``qs.reps``. T is 1 on and above the anti-diagonal
(``p + q <= s - 1``), U holds ``n // (i*j)``, M holds ``M(n // (i*j))``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from mertens_matrices.algebra import AlgebraVector, basis, regular_rep
from mertens_matrices.arith import MertensTable
from mertens_matrices.errors import RangeError
from mertens_matrices.quotient import QuotientStructure

_INT64_MAX = np.iinfo(np.int64).max


def _upper_antitriangle(s: int) -> np.ndarray:
    p = np.arange(s)
    return p[:, None] + p[None, :] <= s - 1


def build_T(qs: QuotientStructure) -> np.ndarray:
    return _upper_antitriangle(qs.s).astype(np.int64)


def inverse_T(qs: QuotientStructure | int) -> np.ndarray:
    """Exact inverse of T: +1 on the anti-diagonal, -1 just below it."""
    s = qs if isinstance(qs, int) else qs.s
    out = np.zeros((s, s), dtype=np.int64)
    p = np.arange(s)
    out[p, s - 1 - p] = 1
    out[p[1:], s - p[1:]] = -1
    return out


def apply_inverse_T(A: np.ndarray) -> np.ndarray:
    """T^-1 @ A without forming T^-1 (row p is A[s-1-p] - A[s-p])."""
    flipped = A[::-1]
    out = flipped.copy()
    out[1:] -= flipped[:-1]
    return out


def build_U(qs: QuotientStructure) -> np.ndarray:
    n, reps = qs.n, qs.reps
    # n // (i*j) == (n // i) // j; zero exactly when i*j > n
    return (n // reps)[:, None] // reps[None, :]


def _check_bound(qs: QuotientStructure, mt: MertensTable) -> None:
    if mt.bound < qs.n:
        raise RangeError(f"Mertens table bound {mt.bound} < n={qs.n}")


def build_M(qs: QuotientStructure, mt: MertensTable) -> np.ndarray:
    _check_bound(qs, mt)
    return mt.prefix[build_U(qs)].astype(np.int64)


def mobius_vector(qs: QuotientStructure, mt: MertensTable) -> AlgebraVector:
    """Image of the Möbius sequence: M(k) - M(k^-) on each class."""
    _check_bound(qs, mt)
    values = mt.prefix[qs.reps]
    return AlgebraVector(qs, np.diff(values, prepend=0))


def unit_sum_vector(qs: QuotientStructure) -> AlgebraVector:
    """Image of the all-ones sequence: the class sizes k - k^-."""
    return AlgebraVector(qs, np.diff(qs.reps, prepend=0))


def basis_T_rho(qs: QuotientStructure, k: int) -> np.ndarray:
    """T @ rho(k) from its closed form: 1 exactly where reps[p]*reps[q] <= n // k."""
    bound = qs.n // k
    reps = qs.reps
    # i*j <= b  <=>  i <= b // j
    return (reps[:, None] <= bound // reps[None, :]).astype(np.int64)


def build_M_via_weighted_sum(qs: QuotientStructure, mt: MertensTable) -> np.ndarray:
    """M assembled as the sum over k of (M(k) - M(k^-)) T rho(k)."""
    weights = mobius_vector(qs, mt).coeffs
    out = np.zeros((qs.s, qs.s), dtype=np.int64)
    for k, w in zip(qs.reps.tolist(), weights.tolist()):
        if w:
            out += w * basis_T_rho(qs, k)
    return out


def T_times_rep(qs: QuotientStructure, a: AlgebraVector) -> np.ndarray:
    """T @ rho(a) by explicit matrix product."""
    return build_T(qs) @ regular_rep(a)


@dataclass(frozen=True)
class TUTCheck:
    """Outcome of checking U @ (T^-1 M T^-1) == I.

    ``mismatch`` is ``(row, col, expected, got)`` for the first wrong entry.
    """

    ok: bool
    mismatch: tuple[int, int, int, int] | None = None
    exact_fallback: bool = False

    def __bool__(self) -> bool:
        return self.ok


def verify_TUT(qs: QuotientStructure, mt: MertensTable) -> TUTCheck:
    """Exact check that M = T U^-1 T, via U @ (T^-1 M T^-1) == I."""
    M = build_M(qs, mt)
    U = build_U(qs)
    X = apply_inverse_T(apply_inverse_T(M).T).T
    bound = qs.s * int(np.abs(U).max()) * int(np.abs(X).max())
    wide = bound > _INT64_MAX
    if wide:
        prod = U.astype(object) @ X.astype(object)
    else:
        prod = U @ X
    eye = np.eye(qs.s, dtype=np.int64)
    bad = np.argwhere(prod != eye)
    if len(bad) == 0:
        return TUTCheck(True, None, wide)
    r, c = (int(v) for v in bad[0])
    return TUTCheck(False, (r, c, int(eye[r, c]), int(prod[r, c])), wide)


def build_D(qs: QuotientStructure) -> np.ndarray:
    """Diagonal of D: sqrt(n) / reps."""
    return np.sqrt(qs.n) / qs.reps


def build_Utilde(qs: QuotientStructure) -> np.ndarray:
    """D T D: n / (i*j) on and above the anti-diagonal, 0 below."""
    reps = qs.reps.astype(np.float64)
    return np.where(_upper_antitriangle(qs.s), qs.n / np.outer(reps, reps), 0.0)


def utilde_inverse(qs: QuotientStructure) -> np.ndarray:
    """D^-1 T^-1 D^-1, formed entrywise.

    Anti-diagonal entries are k * bar(k) / n, the ones below are
    -bar(k) * k^+ / n.
    """
    s, n = qs.s, qs.n
    reps = qs.reps.astype(np.float64)
    out = np.zeros((s, s))
    p = np.arange(s)
    out[p, s - 1 - p] = reps * reps[::-1] / n
    q = p[1:]
    out[q, s - q] = -reps[q] * reps[s - q] / n
    return out


def build_Mtilde(qs: QuotientStructure) -> np.ndarray:
    """T Utilde^-1 T in O(s^2).

    (T B T)[i, j] sums B over rows <= s-1-i and columns <= s-1-j, i.e. it is
    the 2-D prefix sum of B read from the opposite corner.
    """
    B = utilde_inverse(qs)
    C = np.cumsum(np.cumsum(B, axis=0), axis=1)[::-1, ::-1]
    return (C + C.T) / 2
