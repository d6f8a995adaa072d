"""Implementation labels this package adds to the benchmark registry.

Importing :mod:`tenhost` registers three labels next to the library's
built-in ``native-loop`` and ``host-loop``:

- ``native-via-ffi``: the compiled kernels called across the boundary
  and timed from the host, so the measurement includes the crossing
  cost. For TTV the timed region also covers reassembling the host
  tensor object from the raw triple, the way a host toolbox consumes
  the result.
- ``host-vectorized``: the array-library TTV baseline (TTV only; the
  dense loop kernels have no vectorized counterpart in this protocol).
  Its timed region includes the same host reassembly step for symmetry.
- ``host-jit``: JIT-compiled loop kernels (dot and matvec experiments),
  available when numba is installed. The first call per process pays
  the compile cost, which is exactly what overhead estimation measures.

Checked mode validates arguments inside the timed region using the same
public contracts as the library kernels; unchecked mode times the bare
calls. Kernel output objects are never validated inside timed regions
(native output is canonical by construction).
"""

import tenkern
from tenkern import ImplEntry, as_matrix, as_vector, register_implementation

from tenhost import jit
from tenhost.baselines import _dot_args, _matvec_args, host_vectorized_ttv
from tenhost.bindings import bound_kernels
from tenhost.hosttensor import host_reassemble_sparse

_LOOP_EXPERIMENTS = ("dot", "matvec_rows", "matvec_cols", "matvec_square")

_bks = None


def _bound():
    global _bks
    if _bks is None:
        _bks = bound_kernels()
    return _bks


def _ffi_thunk(experiment, data, checked):
    bks = _bound()
    if experiment == "dot":
        x, y = data["x"], data["y"]
        if checked:
            return lambda: tenkern.dot(x, y)
        return lambda: bks.dot(x, y)
    if experiment.startswith("matvec"):
        a, x = data["a"], data["x"]
        if checked:
            return lambda: tenkern.matvec(a, x)
        return lambda: bks.matvec(a, x)
    t, xv, k0 = data["tensor"], data["x"], data["k0"]
    if checked:
        return lambda: host_reassemble_sparse(tenkern.ttv(t, xv, k0), validate=False)
    return lambda: host_reassemble_sparse(
        bks.ttv(t.subs, t.vals, t.shape, xv, k0), validate=False
    )


def _vectorized_thunk(experiment, data, checked):
    t, xv, k0 = data["tensor"], data["x"], data["k0"]
    return lambda: host_reassemble_sparse(
        host_vectorized_ttv(t.subs, t.vals, t.shape, xv, k0, validate=checked),
        validate=False,
    )


def _jit_thunk(experiment, data, checked):
    kernels = jit.jit_kernels()
    if experiment == "dot":
        x, y = data["x"], data["y"]
        if checked:
            return lambda: kernels.dot(*_dot_args(x, y))
        return lambda: kernels.dot(x, y)
    a, x = data["a"], data["x"]
    if checked:
        return lambda: kernels.matvec(*_matvec_args(a, x))
    return lambda: kernels.matvec(a, x)


def register() -> None:
    """Install the host-side labels (idempotent; runs at package import)."""
    register_implementation(
        ImplEntry(
            label="native-via-ffi",
            self_timed=False,
            available=tenkern.compiled_available,
            unavailable_reason="compiled extension not built",
            make_thunk=_ffi_thunk,
        )
    )
    register_implementation(
        ImplEntry(
            label="host-vectorized",
            self_timed=False,
            available=lambda: True,
            unavailable_reason="",
            make_thunk=_vectorized_thunk,
            experiments=("ttv",),
        )
    )
    register_implementation(
        ImplEntry(
            label="host-jit",
            self_timed=False,
            available=jit.jit_available,
            unavailable_reason="numba is not installed",
            make_thunk=_jit_thunk,
            experiments=_LOOP_EXPERIMENTS,
        )
    )
