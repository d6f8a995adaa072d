"""Independent reference implementations used as test oracles.

These are written from the kernel definitions alone and deliberately
share no code with the package: plain Python loops for the dense
kernels, a hash map for row accumulation, and a densify/contract/
sparsify pipeline for TTV. The dense oracles use the same fixed
left-to-right single-accumulator order the contracts pin down, so
comparisons against them can demand bitwise equality.
"""

import numpy as np


def oracle_dot(x, y) -> float:
    acc = 0.0
    for i in range(len(x)):
        acc += x[i] * y[i]
    return acc


def oracle_matvec(a, x) -> np.ndarray:
    rows = len(a)
    cols = len(a[0]) if rows else 0
    out = np.empty(rows, dtype=np.float64)
    for i in range(rows):
        acc = 0.0
        for j in range(cols):
            acc += a[i][j] * x[j]
        out[i] = acc
    return out


def oracle_unique_rows_accumulate(keys, weights):
    """Hash-map brute force; insertion adds weights in original row order."""
    sums = {}
    for row, w in zip(keys, weights):
        row = tuple(int(v) for v in row)
        sums[row] = sums.get(row, 0.0) + float(w)
    ordered = sorted(sums)
    ncols = len(keys[0]) if len(keys) else 0
    u = np.array(ordered, dtype=np.int64).reshape(len(ordered), ncols)
    s = np.array([sums[r] for r in ordered], dtype=np.float64)
    return u, s


def oracle_ttv(subs, vals, shape, x, k):
    """Densify, contract mode k with numpy, re-sparsify by scanning.

    Returns (subs, vals, shape) for the nonzero entries of the dense
    result, rows in lexicographic (C scan) order.
    """
    dense = np.zeros(tuple(shape), dtype=np.float64)
    for row, v in zip(np.asarray(subs), np.asarray(vals)):
        dense[tuple(int(i) for i in row)] = float(v)
    contracted = np.tensordot(dense, np.asarray(x, dtype=np.float64), axes=([k], [0]))
    nz = np.nonzero(contracted)
    out_subs = np.column_stack(nz).astype(np.int64) if contracted.ndim else None
    if out_subs is None:
        raise ValueError("oracle does not cover order-0 results")
    if out_subs.size == 0:
        out_subs = out_subs.reshape(0, contracted.ndim)
    return out_subs, contracted[nz].astype(np.float64), contracted.shape


def ttv_tolerance(vals, x, dim_k) -> float:
    """Scaled per-entry tolerance for comparing TTV against the oracle."""
    max_v = float(np.max(np.abs(vals))) if len(vals) else 0.0
    max_x = float(np.max(np.abs(x))) if len(x) else 0.0
    return 1e-12 * (1.0 + max_v * max_x * dim_k)
