"""Handles onto the compiled kernels as seen from the host runtime.

A :class:`BoundKernelSet` is the host's view of the native code: plain
Python callables that hand contiguous float64 buffers across the
extension boundary and get host-native arrays (or the raw TTV triple)
back. When an operand already is a C-contiguous array of the boundary
dtype it crosses without copying; anything else is converted first, and
that copy is the documented cost of the convenience.
"""

import numpy as np

import tenkern
from tenkern import TtvRawResult

__all__ = ["BoundKernelSet", "as_boundary_array", "bound_kernels"]


def as_boundary_array(arr, dtype=np.float64, ndim=None) -> np.ndarray:
    """Coerce ``arr`` for the boundary crossing.

    Returns ``arr`` itself (no copy) when it already is a C-contiguous
    ndarray of ``dtype``; otherwise returns a converted contiguous copy.
    """
    if (
        isinstance(arr, np.ndarray)
        and arr.dtype == dtype
        and arr.flags["C_CONTIGUOUS"]
    ):
        out = arr
    else:
        out = np.ascontiguousarray(arr, dtype=dtype)
    if ndim is not None and out.ndim != ndim:
        raise tenkern.DimensionError(
            f"boundary array must be {ndim}-D, got ndim={out.ndim}"
        )
    return out


class BoundKernelSet:
    """Host-facing handles for the native dot, matvec, and ttv kernels.

    ``release_gil`` controls whether the host's global interpreter lock
    is dropped while native code runs. It defaults to off because
    releasing it changes what a timed call measures (lock traffic is
    part of the boundary cost being studied); flip it only for
    throughput use, never under the benchmark harness.
    """

    def __init__(self, kernel_module=None, *, release_gil=False):
        self._kernels = (
            kernel_module if kernel_module is not None else tenkern.kernels("compiled")
        )
        self.release_gil = bool(release_gil)

    def dot(self, x, y) -> float:
        """Native dot product of two float64 vectors."""
        xb = as_boundary_array(x, ndim=1)
        yb = as_boundary_array(y, ndim=1)
        return self._kernels.dot(xb, yb, self.release_gil)

    def matvec(self, a, x) -> np.ndarray:
        """Native matrix-vector product; returns a host-native float64 vector."""
        ab = as_boundary_array(a, ndim=2)
        xb = as_boundary_array(x, ndim=1)
        return self._kernels.matvec(ab, xb, self.release_gil)

    def ttv(self, subs, vals, shape, x, k) -> TtvRawResult:
        """Native mode-``k`` TTV over raw COO buffers.

        Returns the raw (new_subs, new_vals, new_shape) triple; building
        a host tensor object from it is the caller's step (see
        :func:`tenhost.host_reassemble_sparse`).
        """
        sb = as_boundary_array(subs, dtype=np.int64, ndim=2)
        vb = as_boundary_array(vals, ndim=1)
        xb = as_boundary_array(x, ndim=1)
        raw = self._kernels.ttv_raw(sb, vb, tuple(shape), xb, k, self.release_gil)
        return TtvRawResult(*raw)


def bound_kernels(*, release_gil=False) -> BoundKernelSet:
    """Bind the compiled backend; raises ConfigError when it is not built."""
    return BoundKernelSet(tenkern.kernels("compiled"), release_gil=release_gil)
