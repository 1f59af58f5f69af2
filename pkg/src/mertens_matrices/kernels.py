"""Hot-loop kernels, compiled when available.

Set ``MERTENS_MATRICES_PURE=1`` to force the numpy fallback.
"""
import os

if os.environ.get("MERTENS_MATRICES_PURE"):
    from mertens_matrices import _pykernels as _impl

    BACKEND = "python"
else:
    try:
        from mertens_matrices import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:
        from mertens_matrices import _pykernels as _impl

        BACKEND = "python"

mobius_values = _impl.mobius_values
jacobi_eigenvalues = _impl.jacobi_eigenvalues

__all__ = ["BACKEND", "mobius_values", "jacobi_eigenvalues"]
