"""Calibrate the constant c in max|Mtilde_n| <= c log n.

Mtilde_n is formed by dense inversion of Utilde_n (the slow route, kept
independent of the library's prefix-sum construction). The frozen test
constant is 1.25 times the largest observed ratio.

    python scripts/calibrate_clog.py [--full]
"""
import argparse
import math

import numpy as np

from mertens_matrices.matrices import build_T, build_Utilde
from mertens_matrices.quotient import build_quotient


def swept(full: bool) -> list[int]:
    ns = set(range(100, 10_001, 100)) | set(range(5000, 100_001, 5000))
    if full:
        ns |= set(range(5000, 1_000_001, 5000))
    return sorted(ns)


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--full", action="store_true", help="include the sweep up to 10^6")
    args = parser.parse_args()
    best, where = 0.0, None
    for n in swept(args.full):
        qs = build_quotient(n)
        T = build_T(qs).astype(float)
        Mt = T @ np.linalg.inv(build_Utilde(qs)) @ T
        ratio = float(np.abs(Mt).max()) / math.log(n)
        if ratio > best:
            best, where = ratio, n
    print(f"max ratio {best!r} at n={where}; frozen constant 1.25 * max = {1.25 * best!r}")


if __name__ == "__main__":
    main()
