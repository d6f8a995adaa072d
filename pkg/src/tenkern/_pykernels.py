"""Interpreted loop kernels.

These are the pure-Python reference implementations of the three kernels.
They double as the import-time fallback when the compiled extension is not
available and as the ``host-loop`` benchmark implementation. Summation is
naive left-to-right with a single accumulator, which is what makes results
bitwise-comparable with the compiled backend.

No argument validation happens here beyond what memory safety demands
(the TTV scale step bounds-checks the index it reads); the public
wrappers in :mod:`tenkern.dense` and :mod:`tenkern.sparse` own the rest.
"""

import numpy as np

from tenkern.errors import DimensionError

BACKEND = "python"
SELF_TIMED = False


def dot(x, y):
    """Naive dot product: single loop, one scalar accumulator."""
    acc = 0.0
    for i in range(x.shape[0]):
        acc += x[i] * y[i]
    return float(acc)


def matvec(a, x):
    """Naive matrix-vector product: outer loop over rows, inner over columns."""
    n_rows, n_cols = a.shape
    out = np.empty(n_rows, dtype=np.float64)
    for i in range(n_rows):
        row = a[i]
        acc = 0.0
        for j in range(n_cols):
            acc += row[j] * x[j]
        out[i] = acc
    return out


def unique_rows_accumulate(keys, weights):
    """Group identical rows of ``keys`` and sum their weights.

    Returns the unique rows in lexicographic order and, aligned with them,
    the per-group weight sums. Within a group the weights are added in
    ascending original-row order (Python's sort is stable), so the result
    is reproducible bit for bit.
    """
    n, m = keys.shape
    rows = [tuple(int(v) for v in keys[i]) for i in range(n)]
    order = sorted(range(n), key=rows.__getitem__)
    out_rows = []
    out_sums = []
    i = 0
    while i < n:
        key = rows[order[i]]
        acc = 0.0
        j = i
        while j < n and rows[order[j]] == key:
            acc += weights[order[j]]
            j += 1
        out_rows.append(key)
        out_sums.append(acc)
        i = j
    out_keys = np.array(out_rows, dtype=np.int64).reshape(len(out_rows), m)
    return out_keys, np.array(out_sums, dtype=np.float64)


def ttv_raw(subs, vals, shape, x, k):
    """Mode-``k`` tensor-times-vector over COO data.

    Scale each stored value by the matching vector element, drop index
    column ``k``, sum values over identical projected rows, and eliminate
    groups whose sum is exactly 0.0. Returns ``(new_subs, new_vals,
    new_shape)`` in canonical form.
    """
    d = len(shape)
    keep = [m for m in range(d) if m != k]
    new_shape = tuple(int(shape[m]) for m in keep)
    nnz = subs.shape[0]
    if nnz == 0:
        return (
            np.empty((0, d - 1), dtype=np.int64),
            np.empty(0, dtype=np.float64),
            new_shape,
        )
    nx = x.shape[0]
    w = np.empty(nnz, dtype=np.float64)
    for r in range(nnz):
        idx = subs[r, k]
        # checked in the same pass that reads it; plain numpy indexing
        # would silently wrap negative indices instead of failing
        if idx < 0 or idx >= nx:
            raise DimensionError(
                f"ttv: mode-{k} index out of range for a vector of length {nx}"
            )
        w[r] = vals[r] * x[idx]
    proj = np.ascontiguousarray(subs[:, keep])
    grouped_subs, grouped_vals = unique_rows_accumulate(proj, w)
    nonzero = [i for i in range(grouped_vals.shape[0]) if grouped_vals[i] != 0.0]
    new_subs = np.ascontiguousarray(grouped_subs[nonzero]).reshape(len(nonzero), d - 1)
    new_vals = grouped_vals[nonzero]
    return new_subs, new_vals, new_shape
