"""Sparse COO tensors and the tensor-times-vector kernel.

A tensor of order ``d`` is stored as an ``(nnz, d)`` int64 index matrix, a
float64 value vector, and a shape tuple. Instances are kept in *canonical
form*: index rows unique, lexicographically sorted, in bounds, with no
explicitly stored zeros. Canonical form is what makes tensor equality a
plain array comparison and the TTV accumulation deterministic.

The mode-``k`` TTV contracts a tensor with a vector along dimension ``k``
and returns the raw ``(new_subs, new_vals, new_shape)`` triple, which is
also the exchange format handed across call boundaries.
"""

from typing import NamedTuple

import numpy as np

from tenkern import _pykernels, backend
from tenkern.dense import as_vector
from tenkern.errors import DimensionError, ModeError, OrderError, SizeCapError

__all__ = [
    "SparseCooTensor",
    "TtvRawResult",
    "ttv",
    "set_difference",
    "unique_rows_accumulate",
    "densify",
]

DENSIFY_CAP = 1_000_000


def _rows_strictly_increasing(subs: np.ndarray) -> bool:
    """True iff the rows of ``subs`` are lexicographically sorted and unique."""
    if subs.shape[0] <= 1:
        return True
    a, b = subs[:-1], subs[1:]
    neq = a != b
    has_diff = neq.any(axis=1)
    if not has_diff.all():
        return False
    first = neq.argmax(axis=1)
    rows = np.arange(a.shape[0])
    return bool((b[rows, first] > a[rows, first]).all())


class SparseCooTensor:
    """Immutable d-way sparse tensor in canonical COO form.

    Construction validates bounds and canonicalizes: duplicate index rows
    are summed, exact zeros dropped, rows sorted. Already-canonical input
    (the common case) is detected with vectorized checks and taken as is.

    >>> t = SparseCooTensor([[0, 1], [1, 0]], [5.0, 2.0], (2, 2))
    >>> t.nnz
    2
    """

    __slots__ = ("subs", "vals", "shape")

    def __init__(self, subs, vals, shape):
        shape = tuple(int(n) for n in shape)
        if len(shape) == 0:
            raise OrderError("tensor must have at least one dimension")
        if any(n <= 0 for n in shape):
            raise DimensionError(f"shape entries must be positive, got {shape}")
        subs = np.asarray(subs, dtype=np.int64)
        if subs.size == 0:
            subs = subs.reshape(0, len(shape))
        if subs.ndim != 2:
            raise DimensionError(f"subs must be 2-D (nnz, d), got ndim={subs.ndim}")
        if subs.shape[1] != len(shape):
            raise DimensionError(
                f"subs has {subs.shape[1]} index columns but shape has "
                f"{len(shape)} dimensions"
            )
        vals = np.asarray(vals, dtype=np.float64)
        if vals.ndim != 1:
            raise DimensionError(f"vals must be 1-D, got ndim={vals.ndim}")
        if vals.shape[0] != subs.shape[0]:
            raise DimensionError(
                f"{subs.shape[0]} index rows but {vals.shape[0]} values"
            )
        if subs.shape[0] and (
            subs.min() < 0 or (subs >= np.asarray(shape, dtype=np.int64)).any()
        ):
            raise DimensionError("index out of bounds for shape")

        if _rows_strictly_increasing(subs) and not (vals == 0.0).any():
            subs = np.ascontiguousarray(subs)
            vals = np.ascontiguousarray(vals)
        else:
            subs, vals = _pykernels.unique_rows_accumulate(
                np.ascontiguousarray(subs), np.ascontiguousarray(vals)
            )
            keep = vals != 0.0
            subs = np.ascontiguousarray(subs[keep])
            vals = np.ascontiguousarray(vals[keep])

        subs = subs.copy()
        vals = vals.copy()
        subs.setflags(write=False)
        vals.setflags(write=False)
        object.__setattr__(self, "subs", subs)
        object.__setattr__(self, "vals", vals)
        object.__setattr__(self, "shape", shape)

    def __setattr__(self, name, value):
        raise AttributeError("SparseCooTensor is immutable")

    @classmethod
    def _from_canonical(cls, subs, vals, shape) -> "SparseCooTensor":
        """Wrap already-canonical arrays without re-checking or copying."""
        self = object.__new__(cls)
        subs = np.ascontiguousarray(subs, dtype=np.int64)
        vals = np.ascontiguousarray(vals, dtype=np.float64)
        subs.setflags(write=False)
        vals.setflags(write=False)
        object.__setattr__(self, "subs", subs)
        object.__setattr__(self, "vals", vals)
        object.__setattr__(self, "shape", tuple(int(n) for n in shape))
        return self

    @classmethod
    def from_dense(cls, arr) -> "SparseCooTensor":
        """Sparsify a dense array; nonzero scan order is already canonical."""
        arr = np.asarray(arr, dtype=np.float64)
        nz = np.nonzero(arr)
        subs = np.column_stack(nz).astype(np.int64, copy=False)
        if subs.size == 0:
            subs = subs.reshape(0, arr.ndim)
        return cls._from_canonical(subs, arr[nz], arr.shape)

    @property
    def ndim(self) -> int:
        return len(self.shape)

    @property
    def nnz(self) -> int:
        return int(self.subs.shape[0])

    def __eq__(self, other):
        if not isinstance(other, SparseCooTensor):
            return NotImplemented
        return (
            self.shape == other.shape
            and np.array_equal(self.subs, other.subs)
            and np.array_equal(self.vals, other.vals)
        )

    def __repr__(self):
        return f"SparseCooTensor(shape={self.shape}, nnz={self.nnz})"


class TtvRawResult(NamedTuple):
    """Raw TTV output: the cross-boundary (new_subs, new_vals, new_shape) triple."""

    new_subs: np.ndarray
    new_vals: np.ndarray
    new_shape: tuple

    def to_tensor(self) -> SparseCooTensor:
        return SparseCooTensor._from_canonical(
            self.new_subs, self.new_vals, self.new_shape
        )


def set_difference(universe, remove) -> list:
    """Elements of the sorted, duplicate-free ``universe`` not in ``remove``.

    Order is preserved; elements of ``remove`` absent from ``universe`` are
    ignored. This is the mode-bookkeeping helper behind TTV projection.
    """
    drop = set(int(r) for r in remove)
    return [int(u) for u in universe if int(u) not in drop]


def unique_rows_accumulate(keys, weights):
    """Unique rows of ``keys`` (lexicographic order) and per-row weight sums.

    Weights of a group are summed in ascending original-row order, so the
    output is reproducible bit for bit. Empty input gives empty outputs.
    """
    keys = np.asarray(keys, dtype=np.int64)
    weights = np.asarray(weights, dtype=np.float64)
    if keys.size == 0 and keys.ndim == 1:
        keys = keys.reshape(0, 0)
    if keys.ndim != 2:
        raise DimensionError(f"keys must be 2-D, got ndim={keys.ndim}")
    if weights.ndim != 1 or weights.shape[0] != keys.shape[0]:
        raise DimensionError(
            f"{keys.shape[0]} key rows but {weights.shape} weights"
        )
    return _pykernels.unique_rows_accumulate(
        np.ascontiguousarray(keys), np.ascontiguousarray(weights)
    )


def _check_ttv_args(a: SparseCooTensor, xv: np.ndarray, k: int) -> None:
    d = a.ndim
    if d < 2:
        raise OrderError(f"ttv: tensor order must be at least 2, got {d}")
    if not 0 <= k < d:
        raise ModeError(f"ttv: mode {k} out of range for order-{d} tensor")
    if xv.shape[0] != a.shape[k]:
        raise DimensionError(
            f"ttv: vector length {xv.shape[0]} does not match "
            f"shape[{k}] == {a.shape[k]}"
        )


def ttv(a: SparseCooTensor, x, k: int, *, validate: bool = True) -> TtvRawResult:
    """Mode-``k`` tensor-times-vector product (0-based ``k``).

    Scales every stored value by the vector element its mode-``k`` index
    selects, drops index column ``k``, sums values over identical projected
    rows (ascending original-row order within a group), and eliminates
    groups whose sum is exactly 0.0.

    ``validate=False`` skips the argument checks for benchmarking; the
    caller is then trusted to pass a legal mode and a matching vector.

    >>> t = SparseCooTensor([[0, 0, 0], [0, 1, 0]], [2.0, 3.0], (2, 2, 2))
    >>> ttv(t, [10.0, 100.0], 1).new_vals
    array([320.])
    """
    xv = as_vector(x)
    k = int(k)
    if validate:
        _check_ttv_args(a, xv, k)
    raw = backend.kernels().ttv_raw(a.subs, a.vals, a.shape, xv, k)
    return TtvRawResult(*raw)


def densify(a: SparseCooTensor, cap: int = DENSIFY_CAP) -> np.ndarray:
    """Expand to a dense array (test-oracle support; capped element count)."""
    total = int(np.prod(a.shape, dtype=np.int64))
    if total > cap:
        raise SizeCapError(
            f"densify: {total} elements exceeds the cap of {cap}"
        )
    dense = np.zeros(a.shape, dtype=np.float64)
    if a.nnz:
        dense[tuple(a.subs.T)] = a.vals
    return dense
