# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: initializedcheck=False
# cython: cdivision=True
"""Compiled loop kernels.

Same kernels as :mod:`tenkern._pykernels`, compiled to C. Summation order is
identical (left to right, one accumulator), so results are bitwise equal to
the interpreted backend. The ``*_timed`` entry points measure the kernel with
a monotonic clock read on the native side of the call boundary, so the
elapsed time excludes any per-call overhead of crossing into the extension.

This module is private and trusts its inputs; the public wrappers in
:mod:`tenkern.dense` and :mod:`tenkern.sparse` validate. The only checks kept
unconditionally are the O(1) structural guards needed for memory safety.
"""

from libc.stdint cimport int64_t
from posix.time cimport CLOCK_MONOTONIC, clock_gettime, timespec

import numpy as np

from tenkern.errors import DimensionError, ModeError, OrderError

BACKEND = "compiled"
SELF_TIMED = True


cdef inline double _monotonic() noexcept nogil:
    cdef timespec ts
    clock_gettime(CLOCK_MONOTONIC, &ts)
    return <double>ts.tv_sec + 1e-9 * <double>ts.tv_nsec


# ---------------------------------------------------------------------------
# dense kernels
# ---------------------------------------------------------------------------

cdef double _dot_impl(const double[::1] x, const double[::1] y) noexcept nogil:
    cdef Py_ssize_t i
    cdef double acc = 0.0
    for i in range(x.shape[0]):
        acc += x[i] * y[i]
    return acc


cdef void _matvec_impl(const double[:, ::1] a, const double[::1] x,
                       double[::1] out) noexcept nogil:
    cdef Py_ssize_t i, j
    cdef double acc
    for i in range(a.shape[0]):
        acc = 0.0
        for j in range(a.shape[1]):
            acc += a[i, j] * x[j]
        out[i] = acc


cdef inline int _check_dot(const double[::1] x, const double[::1] y) except -1:
    if x.shape[0] != y.shape[0]:
        raise DimensionError(
            "dot: operand lengths differ: %d vs %d" % (x.shape[0], y.shape[0])
        )
    return 0


cdef inline int _check_matvec(const double[:, ::1] a, const double[::1] x) except -1:
    if a.shape[1] != x.shape[0]:
        raise DimensionError(
            "matvec: matrix has %d columns but vector has length %d"
            % (a.shape[1], x.shape[0])
        )
    return 0


def dot(const double[::1] x not None, const double[::1] y not None,
        bint release_gil=False):
    cdef double r
    if release_gil:
        with nogil:
            r = _dot_impl(x, y)
        return r
    return _dot_impl(x, y)


def matvec(const double[:, ::1] a not None, const double[::1] x not None,
           bint release_gil=False):
    out = np.empty(a.shape[0], dtype=np.float64)
    cdef double[::1] out_view = out
    if release_gil:
        with nogil:
            _matvec_impl(a, x, out_view)
    else:
        _matvec_impl(a, x, out_view)
    return out


def dot_timed(const double[::1] x not None, const double[::1] y not None,
              bint checked=False):
    """Run the dot kernel once, timing it with the native monotonic clock."""
    cdef double t0, t1, r
    t0 = _monotonic()
    if checked:
        _check_dot(x, y)
    r = _dot_impl(x, y)
    t1 = _monotonic()
    return r, t1 - t0


def matvec_timed(const double[:, ::1] a not None, const double[::1] x not None,
                 bint checked=False):
    """Run the matvec kernel once (result allocation included) under the native clock."""
    cdef double t0, t1
    cdef double[::1] out_view
    t0 = _monotonic()
    if checked:
        _check_matvec(a, x)
    out = np.empty(a.shape[0], dtype=np.float64)
    out_view = out
    _matvec_impl(a, x, out_view)
    t1 = _monotonic()
    return out, t1 - t0


# ---------------------------------------------------------------------------
# sparse tensor-times-vector
# ---------------------------------------------------------------------------

cdef bint _scale_project(const int64_t[:, ::1] subs, const double[::1] vals,
                         const double[::1] x, Py_ssize_t k,
                         double[::1] w, int64_t[:, ::1] proj) noexcept nogil:
    # The mode-k index bound is checked in the same pass that reads it:
    # this entry point is reachable with arbitrary buffers, and x[idx]
    # must never leave the vector. Returns False on a bad index.
    cdef Py_ssize_t r, m, c
    cdef Py_ssize_t nnz = subs.shape[0]
    cdef Py_ssize_t d = subs.shape[1]
    cdef Py_ssize_t nx = x.shape[0]
    cdef int64_t idx
    for r in range(nnz):
        idx = subs[r, k]
        if idx < 0 or idx >= nx:
            return False
        w[r] = vals[r] * x[idx]
        c = 0
        for m in range(d):
            if m != k:
                proj[r, c] = subs[r, m]
                c += 1
    return True


cdef inline bint _row_le(const int64_t[:, ::1] proj, Py_ssize_t ra,
                         Py_ssize_t rb) noexcept nogil:
    cdef Py_ssize_t c
    for c in range(proj.shape[1]):
        if proj[ra, c] < proj[rb, c]:
            return True
        if proj[ra, c] > proj[rb, c]:
            return False
    return True


cdef void _merge_argsort(const int64_t[:, ::1] proj, int64_t[::1] order,
                         int64_t[::1] buf) noexcept nogil:
    # Bottom-up stable merge sort of order[] by lexicographic row comparison.
    cdef Py_ssize_t n = order.shape[0]
    cdef Py_ssize_t width = 1
    cdef Py_ssize_t lo, mid, hi, i, a, b
    while width < n:
        lo = 0
        while lo + width < n:
            mid = lo + width
            hi = lo + 2 * width
            if hi > n:
                hi = n
            a = lo
            b = mid
            i = lo
            while a < mid and b < hi:
                if _row_le(proj, order[a], order[b]):
                    buf[i] = order[a]
                    a += 1
                else:
                    buf[i] = order[b]
                    b += 1
                i += 1
            while a < mid:
                buf[i] = order[a]
                a += 1
                i += 1
            while b < hi:
                buf[i] = order[b]
                b += 1
                i += 1
            for i in range(lo, hi):
                order[i] = buf[i]
            lo += 2 * width
        width *= 2


cdef void _counting_passes(const int64_t[:, ::1] proj, const int64_t[::1] dims,
                           int64_t[::1] order, int64_t[::1] scratch,
                           int64_t[::1] counts) noexcept nogil:
    # LSD radix: one stable counting sort per column, last column first.
    cdef Py_ssize_t nnz = proj.shape[0]
    cdef Py_ssize_t dk = proj.shape[1]
    cdef Py_ssize_t col, i
    cdef int64_t nb, total, cnt, key
    for col in range(dk - 1, -1, -1):
        nb = dims[col]
        for i in range(nb):
            counts[i] = 0
        for i in range(nnz):
            counts[proj[order[i], col]] += 1
        total = 0
        for i in range(nb):
            cnt = counts[i]
            counts[i] = total
            total += cnt
        for i in range(nnz):
            key = proj[order[i], col]
            scratch[counts[key]] = order[i]
            counts[key] += 1
        for i in range(nnz):
            order[i] = scratch[i]


cdef void _argsort_rows(const int64_t[:, ::1] proj, const int64_t[::1] dims,
                        int64_t[::1] order, int64_t[::1] scratch,
                        int64_t[::1] counts) noexcept nogil:
    cdef Py_ssize_t nnz = proj.shape[0]
    cdef Py_ssize_t dk = proj.shape[1]
    cdef Py_ssize_t i, col
    cdef bint counting = counts.shape[0] > 0
    cdef int64_t v
    for i in range(nnz):
        order[i] = i
    if nnz <= 1 or dk == 0:
        return
    if counting:
        # Counting needs every key strictly inside its declared dimension;
        # anything else (possible only through the unchecked private API)
        # falls back to the comparison sort, which cannot scribble.
        for col in range(dk):
            if dims[col] > counts.shape[0]:
                counting = False
                break
            for i in range(nnz):
                v = proj[i, col]
                if v < 0 or v >= dims[col]:
                    counting = False
                    break
            if not counting:
                break
    if counting:
        _counting_passes(proj, dims, order, scratch, counts)
    else:
        _merge_argsort(proj, order, scratch)


cdef Py_ssize_t _group_sum_nonzero(const int64_t[:, ::1] proj, const double[::1] w,
                                   const int64_t[::1] order,
                                   int64_t[:, ::1] out_subs,
                                   double[::1] out_vals) noexcept nogil:
    # Scan the sorted permutation, summing each run of equal rows in
    # ascending original-row order and dropping exact-zero sums.
    cdef Py_ssize_t nnz = proj.shape[0]
    cdef Py_ssize_t dk = proj.shape[1]
    cdef Py_ssize_t u = 0, i = 0, j, c
    cdef Py_ssize_t ra, rb
    cdef double acc
    cdef bint same
    while i < nnz:
        ra = order[i]
        acc = w[ra]
        j = i + 1
        while j < nnz:
            rb = order[j]
            same = True
            for c in range(dk):
                if proj[ra, c] != proj[rb, c]:
                    same = False
                    break
            if not same:
                break
            acc += w[rb]
            j += 1
        if acc != 0.0:
            for c in range(dk):
                out_subs[u, c] = proj[ra, c]
            out_vals[u] = acc
            u += 1
        i = j
    return u


cdef inline int _check_ttv(Py_ssize_t d, tuple shape, const double[::1] x,
                           Py_ssize_t k) except -1:
    # Structural guards; always on, since the scale step indexes x by subs.
    if d < 2:
        raise OrderError("ttv: tensor order must be at least 2, got %d" % d)
    if k < 0 or k >= d:
        raise ModeError("ttv: mode %d out of range for order-%d tensor" % (k, d))
    if x.shape[0] != <Py_ssize_t>shape[k]:
        raise DimensionError(
            "ttv: vector length %d does not match shape[%d] == %d"
            % (x.shape[0], k, <Py_ssize_t>shape[k])
        )
    return 0


cdef tuple _ttv_pipeline(const int64_t[:, ::1] subs, const double[::1] vals,
                         tuple shape, const double[::1] x, Py_ssize_t k,
                         bint release_gil):
    cdef Py_ssize_t nnz = subs.shape[0]
    cdef Py_ssize_t d = len(shape)
    cdef Py_ssize_t dk = d - 1
    cdef Py_ssize_t m, u
    _check_ttv(d, shape, x, k)
    new_shape = tuple(shape[m] for m in range(d) if m != k)
    if nnz == 0:
        return (
            np.empty((0, dk), dtype=np.int64),
            np.empty(0, dtype=np.float64),
            new_shape,
        )

    w_arr = np.empty(nnz, dtype=np.float64)
    proj_arr = np.empty((nnz, dk), dtype=np.int64)
    order_arr = np.empty(nnz, dtype=np.int64)
    scratch_arr = np.empty(nnz, dtype=np.int64)
    dims_arr = np.array(new_shape, dtype=np.int64)
    max_dim = int(dims_arr.max())
    counting_planned = max_dim <= max(65536, 4 * nnz)
    counts_arr = np.empty(max_dim if counting_planned else 0, dtype=np.int64)
    out_subs_arr = np.empty((nnz, dk), dtype=np.int64)
    out_vals_arr = np.empty(nnz, dtype=np.float64)

    cdef double[::1] w = w_arr
    cdef int64_t[:, ::1] proj = proj_arr
    cdef int64_t[::1] order = order_arr
    cdef int64_t[::1] scratch = scratch_arr
    cdef int64_t[::1] dims = dims_arr
    cdef int64_t[::1] counts = counts_arr
    cdef int64_t[:, ::1] out_subs = out_subs_arr
    cdef double[::1] out_vals = out_vals_arr

    cdef bint scaled
    if release_gil:
        with nogil:
            scaled = _scale_project(subs, vals, x, k, w, proj)
            if scaled:
                _argsort_rows(proj, dims, order, scratch, counts)
                u = _group_sum_nonzero(proj, w, order, out_subs, out_vals)
    else:
        scaled = _scale_project(subs, vals, x, k, w, proj)
        if scaled:
            _argsort_rows(proj, dims, order, scratch, counts)
            u = _group_sum_nonzero(proj, w, order, out_subs, out_vals)
    if not scaled:
        raise DimensionError(
            "ttv: mode-%d index out of range for a vector of length %d"
            % (k, x.shape[0])
        )

    return (out_subs_arr[:u].copy(), out_vals_arr[:u].copy(), new_shape)


def ttv_raw(const int64_t[:, ::1] subs not None, const double[::1] vals not None,
            tuple shape, const double[::1] x not None, Py_ssize_t k,
            bint release_gil=False):
    """Mode-``k`` TTV over raw COO buffers; returns (new_subs, new_vals, new_shape)."""
    return _ttv_pipeline(subs, vals, shape, x, k, release_gil)


def ttv_timed(const int64_t[:, ::1] subs not None, const double[::1] vals not None,
              tuple shape, const double[::1] x not None, Py_ssize_t k):
    """Run the TTV kernel once (scale, sort, accumulate, filter) under the native clock.

    The O(1) structural guards always run (memory safety); there is no
    separate checked flag here.
    """
    cdef double t0, t1
    t0 = _monotonic()
    res = _ttv_pipeline(subs, vals, shape, x, k, False)
    t1 = _monotonic()
    return res, t1 - t0
