"""Tensor kernels with a compiled core, a pure-Python fallback, and a
benchmark harness for comparing them.

The compiled extension is optional: when it is absent every kernel runs
on the interpreted fallback and the package stays fully functional. Use
:func:`active_backend` to see which core is serving calls.
"""

from tenkern.backend import active_backend, compiled_available, kernels
from tenkern.bench import (
    DEFAULT_DENSITY,
    DEFAULT_MODE,
    DEFAULT_SEED,
    DEFAULT_SIZES,
    DEFAULT_TRIALS,
    EXPERIMENTS,
    BenchRecord,
    ExperimentConfig,
    ImplEntry,
    Summary,
    available_implementations,
    implementations,
    register_implementation,
    run_experiment,
    size_descriptor,
    summarize,
    time_once,
)
from tenkern.csvio import read_csv, write_csv
from tenkern.dense import as_matrix, as_vector, dot, matvec
from tenkern.errors import (
    AggregationError,
    ConfigError,
    DimensionError,
    GenerationError,
    IntegrityError,
    ModeError,
    OrderError,
    SizeCapError,
    TenkernError,
)
from tenkern.sparse import (
    SparseCooTensor,
    TtvRawResult,
    densify,
    set_difference,
    ttv,
    unique_rows_accumulate,
)
from tenkern.synth import GENERATOR, GenSpec, gen_matrix, gen_sparse3, gen_vector

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # backend
    "active_backend",
    "compiled_available",
    "kernels",
    # errors
    "TenkernError",
    "DimensionError",
    "ModeError",
    "OrderError",
    "SizeCapError",
    "GenerationError",
    "ConfigError",
    "AggregationError",
    "IntegrityError",
    # dense kernels
    "as_vector",
    "as_matrix",
    "dot",
    "matvec",
    # sparse kernels
    "SparseCooTensor",
    "TtvRawResult",
    "ttv",
    "set_difference",
    "unique_rows_accumulate",
    "densify",
    # generation
    "GENERATOR",
    "GenSpec",
    "gen_vector",
    "gen_matrix",
    "gen_sparse3",
    # benchmarking
    "EXPERIMENTS",
    "DEFAULT_SIZES",
    "DEFAULT_SEED",
    "DEFAULT_TRIALS",
    "DEFAULT_DENSITY",
    "DEFAULT_MODE",
    "ExperimentConfig",
    "BenchRecord",
    "Summary",
    "ImplEntry",
    "register_implementation",
    "implementations",
    "available_implementations",
    "run_experiment",
    "summarize",
    "size_descriptor",
    "time_once",
    # CSV
    "write_csv",
    "read_csv",
]
