"""Shared fixtures and skip markers for the tenhost suite.

Most tests need the compiled tenkern backend (the whole point of the
bindings layer); a few need numba. Both are expressed as reusable
skipif markers so each file states its requirement once.
"""

import numpy as np
import pytest

from tenkern import backend

from tenhost import jit

requires_compiled = pytest.mark.skipif(
    not backend.compiled_available(),
    reason="compiled tenkern backend not built",
)

requires_jit = pytest.mark.skipif(
    not jit.jit_available(),
    reason="numba not installed",
)


@pytest.fixture
def rng():
    return np.random.default_rng(90909)
