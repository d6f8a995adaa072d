"""Host-side comparison baselines.

Three reference points for the native kernels, all living entirely in
the host runtime:

- ``host_baseline_dot`` / ``host_baseline_matvec``: the interpreted
  loops. They execute the same floating-point operations in the same
  order as the native code, so on identical operand bytes their results
  match the native results bitwise.
- ``host_vectorized_ttv``: TTV built from the array library's bulk
  primitives the way a host tensor toolbox writes it (set difference,
  gather-scale, unique-rows group-accumulate, nonzero filter), with no
  dense intermediate. Group sums may associate differently from the
  native kernel, so values agree to tolerance rather than bitwise.

``validate=True`` (default) enforces the same error contracts as the
library's public kernels; ``validate=False`` is the benchmarked
configuration with all checking stripped from the timed path.
"""

import numpy as np

import tenkern
from tenkern import (
    DimensionError,
    ModeError,
    OrderError,
    TtvRawResult,
    as_matrix,
    as_vector,
)

__all__ = ["host_baseline_dot", "host_baseline_matvec", "host_vectorized_ttv"]

_interp = tenkern.kernels("python")


def _dot_args(x, y):
    xv = as_vector(x)
    yv = as_vector(y)
    if xv.shape[0] != yv.shape[0]:
        raise DimensionError(
            f"dot: operand lengths differ: {xv.shape[0]} vs {yv.shape[0]}"
        )
    return xv, yv


def _matvec_args(a, x):
    av = as_matrix(a)
    xv = as_vector(x)
    if av.shape[1] != xv.shape[0]:
        raise DimensionError(
            f"matvec: matrix has {av.shape[1]} columns but vector has "
            f"length {xv.shape[0]}"
        )
    return av, xv


def host_baseline_dot(x, y, *, validate=True) -> float:
    """Interpreted naive dot product (single accumulator, left to right)."""
    if validate:
        x, y = _dot_args(x, y)
    return _interp.dot(x, y)


def host_baseline_matvec(a, x, *, validate=True) -> np.ndarray:
    """Interpreted naive matvec (outer loop over rows, inner over columns)."""
    if validate:
        a, x = _matvec_args(a, x)
    return _interp.matvec(a, x)


def host_vectorized_ttv(subs, vals, shape, x, k, *, validate=True) -> TtvRawResult:
    """Vectorized mode-``k`` TTV over raw COO buffers.

    Same mathematical contract as the native kernel: scale by the
    selected vector elements, drop index column ``k``, sum collided
    projected rows, eliminate exact-zero sums, return the canonical raw
    triple.
    """
    subs = np.asarray(subs, dtype=np.int64)
    vals = np.asarray(vals, dtype=np.float64)
    x = np.asarray(x, dtype=np.float64)
    shape = tuple(int(s) for s in shape)
    k = int(k)
    if validate:
        d = len(shape)
        if d < 2:
            raise OrderError(f"ttv: tensor order must be at least 2, got {d}")
        if not 0 <= k < d:
            raise ModeError(f"ttv: mode {k} out of range for order-{d} tensor")
        if x.shape[0] != shape[k]:
            raise DimensionError(
                f"ttv: vector length {x.shape[0]} does not match "
                f"shape[{k}] == {shape[k]}"
            )
    remdims = np.setdiff1d(np.arange(len(shape)), k)
    new_shape = tuple(shape[m] for m in remdims)
    scaled = vals * x[subs[:, k]]
    projected = subs[:, remdims]
    uniq, inverse = np.unique(projected, axis=0, return_inverse=True)
    sums = np.bincount(inverse.ravel(), weights=scaled, minlength=uniq.shape[0])
    nz = np.nonzero(sums)[0]
    return TtvRawResult(np.ascontiguousarray(uniq[nz]), sums[nz], new_shape)
