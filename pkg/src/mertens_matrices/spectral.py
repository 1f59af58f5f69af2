"""Spectral 2-norm of symmetric matrices."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from mertens_matrices.errors import DomainError, OracleSizeError, ShapeError
from mertens_matrices.kernels import jacobi_eigenvalues

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 20000
DEFAULT_SEED = 42
ORACLE_MAX_SIZE = 300
SYMMETRY_RTOL = 1e-12

# Numerical Recipes LCG constants, modulus 2**32
_LCG_A = 1664525
_LCG_C = 1013904223
_LCG_M = 2**32


@dataclass(frozen=True)
class NormResult:
    value: float
    iterations: int
    residual: float
    converged: bool

    def __float__(self) -> float:
        return self.value


def lcg_vector(size: int, seed: int = DEFAULT_SEED) -> np.ndarray:
    """Start vector with components in [-1, 1) from a 32-bit LCG."""
    x = seed % _LCG_M
    out = np.empty(size)
    for i in range(size):
        x = (_LCG_A * x + _LCG_C) % _LCG_M
        out[i] = 2.0 * x / _LCG_M - 1.0
    return out


def _as_symmetric(A) -> np.ndarray:
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {A.shape}")
    if np.issubdtype(A.dtype, np.integer) or A.dtype == object:
        if not np.array_equal(A, A.T):
            raise ShapeError("matrix is not symmetric")
        return A.astype(np.float64)
    A = A.astype(np.float64, copy=False)
    scale = float(np.abs(A).max()) if A.size else 0.0
    if float(np.abs(A - A.T).max(initial=0.0)) > SYMMETRY_RTOL * scale:
        raise ShapeError("matrix is not symmetric")
    return A


def spectral_norm_symmetric(
    A,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    seed: int = DEFAULT_SEED,
) -> NormResult:
    """Largest |eigenvalue| by power iteration on A^2.

    Working on A^2 makes a dominant pair +-lambda harmless. The stopping
    test is the relative change of the Rayleigh quotient of A^2, which is
    ||A v||^2 for unit v; the returned value is its square root.
    """
    if tol <= 0:
        raise DomainError(f"tol must be positive, got {tol}")
    A = _as_symmetric(A)
    size = A.shape[0]
    if size == 0:
        raise ShapeError("empty matrix")
    if size == 1:
        return NormResult(abs(float(A[0, 0])), 0, 0.0, True)
    v = lcg_vector(size, seed)
    v /= np.linalg.norm(v)
    theta = None
    residual = np.inf
    for it in range(1, max_iter + 1):
        w = A @ v
        new_theta = float(w @ w)
        if new_theta == 0.0:
            # v is in the kernel; only possible here when A == 0
            if not A.any():
                return NormResult(0.0, it, 0.0, True)
            v = lcg_vector(size, seed + it)
            v /= np.linalg.norm(v)
            continue
        if theta is not None:
            residual = abs(new_theta - theta) / new_theta
            if residual <= tol:
                return NormResult(float(np.sqrt(new_theta)), it, residual, True)
        theta = new_theta
        y = A @ w
        v = y / np.linalg.norm(y)
    return NormResult(float(np.sqrt(theta)), max_iter, float(residual), False)


def symmetric_eigenvalues(A, tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """All eigenvalues via cyclic Jacobi, ascending."""
    A = _as_symmetric(A)
    if A.shape[0] > ORACLE_MAX_SIZE:
        raise OracleSizeError(f"oracle limited to size {ORACLE_MAX_SIZE}, got {A.shape[0]}")
    values, _, converged = jacobi_eigenvalues(np.ascontiguousarray(A), tol, max_sweeps)
    if not converged:
        raise ArithmeticError(f"Jacobi did not converge in {max_sweeps} sweeps")
    return np.sort(values)


def spectral_norm_oracle(A) -> float:
    values = symmetric_eigenvalues(A)
    return float(np.abs(values).max())


def rayleigh_lower_bound(A, w) -> float:
    """w'Aw / ||w||^2."""
    A = np.asarray(A, dtype=np.float64)
    w = np.asarray(w, dtype=np.float64)
    if w.shape != (A.shape[0],):
        raise ShapeError(f"vector of length {w.shape} for a size-{A.shape[0]} matrix")
    norm2 = float(w @ w)
    if norm2 == 0.0:
        raise DomainError("zero vector")
    return float(w @ A @ w) / norm2
