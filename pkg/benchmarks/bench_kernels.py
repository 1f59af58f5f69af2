"""Compare the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import timeit

import numpy as np

from mertens_matrices import _pykernels
from mertens_matrices.matrices import build_M
from mertens_matrices.arith import mertens_table
from mertens_matrices.quotient import build_quotient

try:
    from mertens_matrices import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, repeat: int) -> float:
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def cases():
    for N in (10**6, 10**7):
        yield f"mobius_values N={N:.0e}", lambda impl, N=N: impl.mobius_values(N)
    mt = mertens_table(40_000)
    for n in (2000, 40_000):
        A = build_M(build_quotient(n), mt).astype(np.float64)
        yield f"jacobi M_n n={n} (s={A.shape[0]})", lambda impl, A=A: impl.jacobi_eigenvalues(A, 1e-12, 100)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    print(f"{'case':<34} {'cython s':>10} {'python s':>10} {'speedup':>8}")
    for name, fn in cases():
        py = best_of(lambda: fn(_pykernels), args.repeat)
        if _ckernels is None:
            print(f"{name:<34} {'n/a':>10} {py:>10.4f} {'':>8}")
            continue
        cy = best_of(lambda: fn(_ckernels), args.repeat)
        print(f"{name:<34} {cy:>10.4f} {py:>10.4f} {py / cy:>7.1f}x")


if __name__ == "__main__":
    main()
