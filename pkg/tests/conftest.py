import numpy as np
import pytest

from tenkern import backend

BACKENDS = [backend.PYTHON]
if backend.compiled_available():
    BACKENDS.append(backend.COMPILED)


@pytest.fixture(params=BACKENDS)
def kern(request):
    """Kernel module fixture, parametrized over every built backend."""
    return backend.kernels(request.param)


@pytest.fixture
def rng():
    return np.random.default_rng(987654321)
