"""Symmetric matrices built from floor-quotient classes, tied to the Mertens function."""
from mertens_matrices.kernels import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
