# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Same contracts as ``_pykernels``."""
import numpy as np
cimport numpy as cnp
from libc.math cimport fabs, log, sqrt

cnp.import_array()


def mobius_values(Py_ssize_t N):
    """Return an int8 array ``mu`` of length N + 1 with ``mu[0] = 0``.

    Linear sieve: every composite is struck exactly once, by its least
    prime factor.
    """
    cdef cnp.ndarray[cnp.int8_t, ndim=1] mu_arr = np.zeros(N + 1, dtype=np.int8)
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] comp_arr = np.zeros(N + 1, dtype=np.uint8)
    cdef Py_ssize_t cap
    if N < 100:
        cap = N + 1
    else:
        # pi(x) < 1.25506 x / ln x for x > 1
        cap = <Py_ssize_t>(1.26 * N / log(<double>N)) + 16
    cdef cnp.ndarray[cnp.int64_t, ndim=1] primes_arr = np.empty(cap, dtype=np.int64)
    cdef cnp.int8_t[::1] mu = mu_arr
    cdef cnp.uint8_t[::1] comp = comp_arr
    cdef cnp.int64_t[::1] primes = primes_arr
    cdef Py_ssize_t i, j, np_ = 0
    cdef cnp.int64_t p, ip
    if N >= 1:
        mu[1] = 1
    for i in range(2, N + 1):
        if not comp[i]:
            primes[np_] = i
            np_ += 1
            mu[i] = -1
        for j in range(np_):
            p = primes[j]
            ip = i * p
            if ip > N:
                break
            comp[ip] = 1
            if i % p == 0:
                mu[ip] = 0
                break
            mu[ip] = -mu[i]
    return mu_arr


def jacobi_eigenvalues(a_in, double tol=1e-12, int max_sweeps=100):
    """Cyclic-by-row Jacobi on a symmetric matrix.

    Returns ``(eigenvalues, sweeps, converged)``; converged once the
    off-diagonal Frobenius norm is at most ``tol`` times the full one.
    """
    cdef cnp.ndarray[cnp.float64_t, ndim=2] work = np.array(a_in, dtype=np.float64, order="C", copy=True)
    cdef double[:, ::1] a = work
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t p, q, k
    cdef int sweep
    cdef double fro2 = 0.0, off2, apq, tau, t, c, s, akp, akq
    # work on a / max|a| so squared norms cannot overflow
    cdef double scale = float(np.abs(work).max()) if n else 0.0
    if scale == 0.0:
        return np.diagonal(work).copy(), 0, True
    for p in range(n):
        for q in range(n):
            a[p, q] /= scale
    for p in range(n):
        for q in range(n):
            fro2 += a[p, q] * a[p, q]
    for sweep in range(max_sweeps + 1):
        off2 = 0.0
        for p in range(n):
            for q in range(n):
                if p != q:
                    off2 += a[p, q] * a[p, q]
        if off2 <= tol * tol * fro2:
            return np.diagonal(work) * scale, sweep, True
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if fabs(tau) > 1e150:
                    t = 0.5 / tau
                elif tau >= 0:
                    t = 1.0 / (tau + sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + sqrt(1.0 + tau * tau))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[k, q] = s * akp + c * akq
                for k in range(n):
                    akp = a[p, k]
                    akq = a[q, k]
                    a[p, k] = c * akp - s * akq
                    a[q, k] = s * akp + c * akq
    return np.diagonal(work) * scale, max_sweeps, False
