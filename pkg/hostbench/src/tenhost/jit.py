"""JIT-compiled variants of the loop kernels (optional numba baseline).

The dispatchers are created lazily and cached for the process, with the
on-disk cache disabled, so machine-code compilation happens exactly once
per process, inside the first call. That is the measurable first-call
cost the overhead estimator exists to capture; a fresh process is the
only way to observe it again.

When numba is not installed the probe reports unavailable and everything
else degrades gracefully; nothing in this module imports numba at import
time.
"""

import importlib.util
from types import SimpleNamespace

from tenkern import ConfigError

__all__ = ["jit_available", "jit_kernels", "jit_unavailable_reason"]

_cache = None


def _numba_spec():
    return importlib.util.find_spec("numba")


def jit_available() -> bool:
    """True when the numba package is importable."""
    return _numba_spec() is not None


def jit_unavailable_reason() -> str:
    return "numba is not installed" if not jit_available() else ""


def jit_kernels():
    """Namespace with JIT dispatchers ``dot(x, y)`` and ``matvec(a, x)``.

    The same dispatcher objects are returned on every call. Raises
    ConfigError when numba is missing; a compilation failure surfaces on
    the first invocation of the returned callables.
    """
    global _cache
    if _cache is not None:
        return _cache
    if not jit_available():
        raise ConfigError(f"host-jit: {jit_unavailable_reason()}")
    import numba
    import numpy as np

    @numba.njit(cache=False)
    def dot(x, y):
        acc = 0.0
        for i in range(x.shape[0]):
            acc += x[i] * y[i]
        return acc

    @numba.njit(cache=False)
    def matvec(a, x):
        n_rows, n_cols = a.shape
        out = np.empty(n_rows, dtype=np.float64)
        for i in range(n_rows):
            acc = 0.0
            for j in range(n_cols):
                acc += a[i, j] * x[j]
            out[i] = acc
        return out

    _cache = SimpleNamespace(dot=dot, matvec=matvec)
    return _cache
