"""Host-side view of the tenkern kernels.

Bindings onto the compiled extension, host-runtime comparison baselines
(interpreted loops, vectorized TTV, optional JIT loops), sparse-result
reassembly, first-call overhead estimation across fresh processes, and
a comparison runner that writes merged CSVs and log-log plots.

Importing this package registers the labels ``native-via-ffi``,
``host-vectorized``, and ``host-jit`` in the tenkern benchmark registry
alongside the built-in ``native-loop`` and ``host-loop``.
"""

from tenhost.baselines import (
    host_baseline_dot,
    host_baseline_matvec,
    host_vectorized_ttv,
)
from tenhost.bindings import BoundKernelSet, as_boundary_array, bound_kernels
from tenhost.compare import ComparisonResult, run_comparison
from tenhost.errors import EstimationError, IntegrityError
from tenhost.hosttensor import HostSparseTensor, host_reassemble_sparse
from tenhost.jit import jit_available, jit_kernels, jit_unavailable_reason
from tenhost.overhead import OverheadEstimate, estimate_overhead, write_overhead_csv
from tenhost import registry as _registry

_registry.register()

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "EstimationError",
    "IntegrityError",
    # bindings
    "BoundKernelSet",
    "as_boundary_array",
    "bound_kernels",
    # host tensor
    "HostSparseTensor",
    "host_reassemble_sparse",
    # baselines
    "host_baseline_dot",
    "host_baseline_matvec",
    "host_vectorized_ttv",
    # JIT
    "jit_available",
    "jit_kernels",
    "jit_unavailable_reason",
    # overhead
    "OverheadEstimate",
    "estimate_overhead",
    "write_overhead_csv",
    # comparison
    "ComparisonResult",
    "run_comparison",
]
