"""Kernel backend selection.

The package ships two interchangeable kernel implementations: the compiled
extension (:mod:`tenkern._ckernels`) and the interpreted fallback
(:mod:`tenkern._pykernels`). The compiled one is preferred at import time
when it built successfully; everything else in the library only talks to
whichever module :func:`kernels` hands out, so the public API works either
way. Both stay importable side by side so the benchmark harness can compare
them under their own labels.
"""

from tenkern import _pykernels
from tenkern.errors import ConfigError

try:
    from tenkern import _ckernels as _compiled
except ImportError:  # extension not built; interpreted kernels take over
    _compiled = None

PYTHON = "python"
COMPILED = "compiled"


def compiled_available() -> bool:
    return _compiled is not None


def active_backend() -> str:
    """Name of the backend the public API dispatches to."""
    return COMPILED if _compiled is not None else PYTHON


def kernels(backend: str | None = None):
    """Return the kernel module for ``backend`` (default: the active one).

    Raises ConfigError for unknown names or when the compiled backend is
    requested but was not built.
    """
    if backend is None:
        return _compiled if _compiled is not None else _pykernels
    if backend == PYTHON:
        return _pykernels
    if backend == COMPILED:
        if _compiled is None:
            raise ConfigError(
                "compiled kernel backend requested but the extension is not built"
            )
        return _compiled
    raise ConfigError(f"unknown kernel backend {backend!r}")
