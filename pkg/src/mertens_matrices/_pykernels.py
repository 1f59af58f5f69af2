"""Pure numpy kernels, used when the compiled extension is unavailable."""
from __future__ import annotations

from functools import lru_cache

import numpy as np


def mobius_values(N: int) -> np.ndarray:
    """Return an int8 array ``mu`` of length N + 1 with ``mu[0] = 0``."""
    mu = np.ones(N + 1, dtype=np.int8)
    mu[0] = 0
    if N < 2:
        return mu
    is_prime = np.ones(N + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, N + 1):
        if p * p > N:
            break
        if is_prime[p]:
            is_prime[p * p :: p] = False
    for p in np.flatnonzero(is_prime):
        p = int(p)
        mu[p::p] *= -1
        if p * p <= N:
            mu[p * p :: p * p] = 0
    return mu


@lru_cache(maxsize=64)
def _round_robin(n: int) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
    # circle method; index n is the bye when n is odd
    m = n + (n % 2)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        ps, qs = [], []
        for i in range(m // 2):
            a, b = players[i], players[m - 1 - i]
            if a < n and b < n:
                ps.append(min(a, b))
                qs.append(max(a, b))
        rounds.append((np.array(ps, dtype=np.intp), np.array(qs, dtype=np.intp)))
        players = [players[0], players[-1]] + players[1:-1]
    return tuple(rounds)


def jacobi_eigenvalues(a_in, tol: float = 1e-12, max_sweeps: int = 100):
    """Cyclic Jacobi with a round-robin ordering.

    Each round rotates a set of disjoint index pairs at once, so one sweep
    costs O(n) vectorized updates. Returns ``(eigenvalues, sweeps, converged)``.
    """
    a = np.array(a_in, dtype=np.float64, copy=True)
    n = a.shape[0]
    # work on a / max|a| so squared norms cannot overflow
    scale = float(np.abs(a).max()) if a.size else 0.0
    if scale == 0.0:
        return np.diagonal(a).copy(), 0, True
    a /= scale
    fro2 = float(np.sum(a * a))
    rounds = _round_robin(n) if n > 1 else ()
    off = ~np.eye(n, dtype=bool)
    for sweep in range(max_sweeps + 1):
        off2 = float(np.sum(a[off] ** 2))
        if off2 <= tol * tol * fro2:
            return np.diagonal(a) * scale, sweep, True
        if sweep == max_sweeps:
            break
        for P, Q in rounds:
            apq = a[P, Q]
            nz = apq != 0.0
            if not nz.any():
                continue
            safe = np.where(nz, apq, 1.0)
            with np.errstate(over="ignore"):
                tau = (a[Q, Q] - a[P, P]) / (2.0 * safe)
            # |tau| > 1e150 would overflow tau**2; t ~ 1/(2 tau) there
            huge = np.abs(tau) > 1e150
            tau_ok = np.where(huge, 1.0, tau)
            sign = np.where(tau_ok >= 0, 1.0, -1.0)
            t = sign / (np.abs(tau_ok) + np.sqrt(1.0 + tau_ok * tau_ok))
            t = np.where(huge, 0.5 / np.where(huge, tau, 1.0), t)
            c = np.where(nz, 1.0 / np.sqrt(1.0 + t * t), 1.0)
            s = np.where(nz, t * c, 0.0)
            cp = a[:, P].copy()
            cq = a[:, Q].copy()
            a[:, P] = cp * c - cq * s
            a[:, Q] = cp * s + cq * c
            rp = a[P, :].copy()
            rq = a[Q, :].copy()
            a[P, :] = c[:, None] * rp - s[:, None] * rq
            a[Q, :] = s[:, None] * rp + c[:, None] * rq
    return np.diagonal(a) * scale, max_sweeps, False
