"""Deterministic generation of benchmark operands.

All operands are drawn from numpy's ``default_rng`` (the 64-bit PCG64
generator) so a ``GenSpec`` fully determines the output. Cross-boundary
tests pass generated operands across the call boundary instead of
regenerating them on the other side; the generator name is recorded in
run metadata for that reason.

Dense values are i.i.d. uniform on [0,1). Sparse tensors get an exact
nonzero count: index triples are sampled uniformly without replacement
until the requested count is reached, rather than deduplicated downward.
"""

from dataclasses import dataclass

import numpy as np

from tenkern.errors import GenerationError
from tenkern.sparse import SparseCooTensor

__all__ = ["GENERATOR", "GenSpec", "gen_vector", "gen_matrix", "gen_sparse3"]

GENERATOR = "numpy.random.default_rng(PCG64)"

KINDS = ("vector", "matrix", "sparse3")

_NDIM_FOR_KIND = {"vector": 1, "matrix": 2, "sparse3": 3}


@dataclass(frozen=True)
class GenSpec:
    """Complete recipe for one generated operand.

    Attributes:
        seed: Unsigned 64-bit generator seed.
        kind: One of ``vector``, ``matrix``, ``sparse3``.
        dims: Size tuple; length 1, 2, or 3 to match ``kind``.
        density: Nonzero fraction in (0, 1]; sparse3 only.
    """

    seed: int
    kind: str
    dims: tuple
    density: float = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise GenerationError(f"unknown kind {self.kind!r}")
        seed = int(self.seed)
        if not 0 <= seed < 2**64:
            raise GenerationError(f"seed must be an unsigned 64-bit int, got {seed}")
        object.__setattr__(self, "seed", seed)
        dims = tuple(int(n) for n in self.dims)
        if len(dims) != _NDIM_FOR_KIND[self.kind]:
            raise GenerationError(
                f"kind {self.kind!r} needs {_NDIM_FOR_KIND[self.kind]} dims, "
                f"got {dims}"
            )
        if any(n <= 0 for n in dims):
            raise GenerationError(f"dims entries must be positive, got {dims}")
        object.__setattr__(self, "dims", dims)
        if self.kind == "sparse3":
            if self.density is None:
                raise GenerationError("sparse3 spec needs a density")
            density = float(self.density)
            if not 0.0 < density <= 1.0:
                raise GenerationError(
                    f"density must lie in (0, 1], got {density}"
                )
            total = dims[0] * dims[1] * dims[2]
            if density * total < 1.0:
                raise GenerationError(
                    f"degenerate spec: density {density} over {total} cells "
                    "yields no nonzeros"
                )
            object.__setattr__(self, "density", density)
        elif self.density is not None:
            raise GenerationError(f"kind {self.kind!r} takes no density")

    @property
    def nnz(self) -> int:
        """Exact nonzero count for a sparse3 spec."""
        if self.kind != "sparse3":
            raise GenerationError(f"kind {self.kind!r} has no nnz")
        total = self.dims[0] * self.dims[1] * self.dims[2]
        return int(round(self.density * total))


def gen_vector(spec: GenSpec) -> np.ndarray:
    """Seeded vector of ``dims[0]`` i.i.d. uniform [0,1) float64 values."""
    if spec.kind != "vector":
        raise GenerationError(f"gen_vector got a {spec.kind!r} spec")
    return np.random.default_rng(spec.seed).random(spec.dims[0])


def gen_matrix(spec: GenSpec) -> np.ndarray:
    """Seeded (rows, cols) matrix of i.i.d. uniform [0,1) float64 values."""
    if spec.kind != "matrix":
        raise GenerationError(f"gen_matrix got a {spec.kind!r} spec")
    return np.random.default_rng(spec.seed).random(spec.dims)


def gen_sparse3(spec: GenSpec) -> SparseCooTensor:
    """Seeded order-3 sparse tensor with an exact nonzero count.

    Exactly round(density * n1 * n2 * n3) distinct index triples are
    chosen uniformly without replacement; values are uniform on [0,1)
    with exact zeros redrawn so the result is canonical. Indices are
    consumed from the generator before values, and that order is pinned:
    it is part of what a seed reproduces.
    """
    if spec.kind != "sparse3":
        raise GenerationError(f"gen_sparse3 got a {spec.kind!r} spec")
    dims = spec.dims
    total = dims[0] * dims[1] * dims[2]
    nnz = spec.nnz
    if nnz == 0:
        raise GenerationError("degenerate spec: zero nonzeros requested")
    rng = np.random.default_rng(spec.seed)

    if nnz == total:
        lin = np.arange(total, dtype=np.int64)
    else:
        # Top up with fresh draws and dedupe until the count is exact.
        # Never draws more than it still needs, so it cannot overshoot,
        # and memory stays O(nnz) even for huge index spaces.
        lin = np.empty(0, dtype=np.int64)
        while lin.size < nnz:
            need = nnz - lin.size
            draw = rng.integers(0, total, size=need, dtype=np.int64)
            lin = np.unique(np.concatenate([lin, draw]))

    vals = rng.random(nnz)
    while True:
        zero = vals == 0.0
        if not zero.any():
            break
        vals[zero] = rng.random(int(zero.sum()))

    # Sorted linear indices unravel (row-major) to lexicographically
    # sorted triples, so the arrays are canonical as built.
    subs = np.column_stack(np.unravel_index(lin, dims)).astype(np.int64, copy=False)
    return SparseCooTensor._from_canonical(subs, vals, dims)
