"""Host-side sparse tensor container and raw-triple reassembly.

The native TTV kernel returns a bare (new_subs, new_vals, new_shape)
triple; the host side wraps it back into a tensor object, the same final
step a host tensor toolbox performs after the boundary crossing. That
reassembly is deliberately a separate, timeable operation: comparison
runs include it in the timed region for every TTV implementation.
"""

import numpy as np

import tenkern
from tenkern import IntegrityError

__all__ = ["HostSparseTensor", "host_reassemble_sparse"]


def _rows_strictly_increasing(subs) -> bool:
    if subs.shape[0] <= 1:
        return True
    prev, cur = subs[:-1], subs[1:]
    neq = prev != cur
    if not neq.any(axis=1).all():
        return False
    first = neq.argmax(axis=1)
    rows = np.arange(first.shape[0])
    return bool((cur[rows, first] > prev[rows, first]).all())


class HostSparseTensor:
    """Sparse COO tensor as the host runtime holds it.

    ``validate=True`` (the default) checks the canonical-form contract:
    index rows unique and lexicographically sorted, all indices in
    bounds, no stored zero values. Violations raise IntegrityError.
    ``validate=False`` trusts the caller and only runs the O(1)
    structural checks; it exists for timed reassembly of kernel output,
    which is canonical by construction.
    """

    __slots__ = ("subs", "vals", "shape")

    def __init__(self, subs, vals, shape, *, validate=True):
        subs = np.ascontiguousarray(subs, dtype=np.int64)
        vals = np.ascontiguousarray(vals, dtype=np.float64)
        shape = tuple(int(s) for s in shape)
        if subs.ndim != 2:
            raise IntegrityError(f"subs must be 2-D, got ndim={subs.ndim}")
        if vals.ndim != 1:
            raise IntegrityError(f"vals must be 1-D, got ndim={vals.ndim}")
        if subs.shape[0] != vals.shape[0]:
            raise IntegrityError(
                f"{subs.shape[0]} index rows but {vals.shape[0]} values"
            )
        if subs.shape[1] != len(shape):
            raise IntegrityError(
                f"index rows have {subs.shape[1]} columns for an "
                f"order-{len(shape)} shape"
            )
        if validate:
            if any(s <= 0 for s in shape):
                raise IntegrityError(f"shape must be positive, got {shape}")
            if subs.size and (
                subs.min() < 0 or (subs >= np.asarray(shape, dtype=np.int64)).any()
            ):
                raise IntegrityError("index out of bounds for shape")
            if not _rows_strictly_increasing(subs):
                raise IntegrityError(
                    "index rows must be unique and lexicographically sorted"
                )
            if (vals == 0.0).any():
                raise IntegrityError("explicitly stored zero value")
        self.subs = subs
        self.vals = vals
        self.shape = shape

    @property
    def ndim(self) -> int:
        return len(self.shape)

    @property
    def nnz(self) -> int:
        return self.vals.shape[0]

    @classmethod
    def from_kernel_tensor(cls, t) -> "HostSparseTensor":
        """Wrap a kernel-side tensor (canonical by construction) without checks."""
        return cls(t.subs, t.vals, t.shape, validate=False)

    def to_kernel_tensor(self):
        """Hand this tensor to the kernel side as a SparseCooTensor."""
        return tenkern.SparseCooTensor(self.subs, self.vals, self.shape)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HostSparseTensor):
            return NotImplemented
        return (
            self.shape == other.shape
            and np.array_equal(self.subs, other.subs)
            and np.array_equal(self.vals, other.vals)
        )

    def __repr__(self) -> str:
        return f"HostSparseTensor(shape={self.shape}, nnz={self.nnz})"


def host_reassemble_sparse(raw, *, validate=True) -> HostSparseTensor:
    """Build the host tensor object from a raw (subs, vals, shape) triple.

    ``raw`` is a TtvRawResult or any 3-sequence in that order. A triple
    that breaks the canonical-form contract raises IntegrityError (under
    the default ``validate=True``).
    """
    try:
        new_subs, new_vals, new_shape = raw
    except (TypeError, ValueError) as exc:
        raise IntegrityError(
            f"raw sparse result must be a (subs, vals, shape) triple: {exc}"
        ) from exc
    return HostSparseTensor(new_subs, new_vals, new_shape, validate=validate)
