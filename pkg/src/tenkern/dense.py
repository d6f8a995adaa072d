"""Dense vector and matrix kernels.

Vectors are 1-D contiguous float64 arrays, matrices are 2-D row-major
(C-order) float64 arrays; element (i, j) lives at flat offset i*cols + j.
Both kernels accumulate left to right into a single scalar, so the same
operands give bitwise-identical results on every backend.
"""

import numpy as np

from tenkern import backend
from tenkern.errors import DimensionError

__all__ = ["as_vector", "as_matrix", "dot", "matvec"]


def as_vector(x) -> np.ndarray:
    """Coerce ``x`` to a contiguous 1-D float64 array (copying only if needed)."""
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim != 1:
        raise DimensionError(f"expected a 1-D vector, got ndim={arr.ndim}")
    return np.ascontiguousarray(arr)


def as_matrix(a) -> np.ndarray:
    """Coerce ``a`` to a contiguous row-major 2-D float64 array."""
    arr = np.asarray(a, dtype=np.float64)
    if arr.ndim != 2:
        raise DimensionError(f"expected a 2-D matrix, got ndim={arr.ndim}")
    return np.ascontiguousarray(arr)


def _dot_args(x, y):
    xv = as_vector(x)
    yv = as_vector(y)
    if xv.shape[0] != yv.shape[0]:
        raise DimensionError(
            f"dot: operand lengths differ: {xv.shape[0]} vs {yv.shape[0]}"
        )
    return xv, yv


def dot(x, y) -> float:
    """Dot product of two equal-length vectors.

    The sum of elementwise products, accumulated in index order with one
    scalar accumulator initialized to 0.0. Empty vectors are legal and give
    0.0, the identity of summation.

    >>> dot([1.0, 2.0, 3.0], [4.0, 5.0, 6.0])
    32.0
    """
    xv, yv = _dot_args(x, y)
    return float(backend.kernels().dot(xv, yv))


def _matvec_args(a, x):
    av = as_matrix(a)
    xv = as_vector(x)
    if av.shape[1] != xv.shape[0]:
        raise DimensionError(
            f"matvec: matrix has {av.shape[1]} columns but vector has "
            f"length {xv.shape[0]}"
        )
    return av, xv


def matvec(a, x) -> np.ndarray:
    """Matrix-vector product: one dot product per matrix row.

    Outer loop over rows, inner loop over columns, each row reduced exactly
    like :func:`dot`, so ``matvec(a, x)[i] == dot(a[i], x)`` bitwise.

    >>> matvec([[1.0, 2.0], [3.0, 4.0]], [1.0, 1.0])
    array([3., 7.])
    """
    av, xv = _matvec_args(a, x)
    return backend.kernels().matvec(av, xv)
