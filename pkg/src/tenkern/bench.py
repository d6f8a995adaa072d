"""Benchmark engine: size grids, warm-up, timed trials, aggregation.

An experiment names a kernel and a grid of operand sizes. For every
(implementation, size) pair the engine runs one recorded warm-up call and
then ``n_trials`` measured calls, each timed with a monotonic clock. The
loop-based kernels get fresh operands for every call; the sparse TTV
experiment generates one dataset per size and reuses it for all trials.

Implementations are looked up in a registry keyed by label. The two
built-in labels are ``native-loop`` (the compiled extension, which times
itself with a native monotonic clock) and ``host-loop`` (the interpreted
kernels, timed from the host). Companion packages may register further
labels through :func:`register_implementation`.
"""

import math
import time
from dataclasses import dataclass

import numpy as np

from tenkern import _pykernels, backend, dense, sparse
from tenkern.errors import AggregationError, ConfigError, ModeError, SizeCapError
from tenkern.synth import GenSpec, gen_matrix, gen_sparse3, gen_vector

__all__ = [
    "EXPERIMENTS",
    "DEFAULT_SIZES",
    "DEFAULT_SEED",
    "DEFAULT_TRIALS",
    "DEFAULT_DENSITY",
    "DEFAULT_MODE",
    "DEFAULT_MEM_CAP_BYTES",
    "MATVEC_CONSTANT",
    "ExperimentConfig",
    "BenchRecord",
    "Summary",
    "ImplEntry",
    "register_implementation",
    "implementations",
    "available_implementations",
    "time_once",
    "run_experiment",
    "summarize",
    "size_descriptor",
    "operand_bytes",
    "build_operands",
    "derive_trial_seed",
    "derive_arg_seed",
]

EXPERIMENTS = ("dot", "matvec_rows", "matvec_cols", "matvec_square", "ttv")

DEFAULT_SIZES = {
    "dot": tuple(10**e for e in range(3, 9)),
    "matvec_rows": tuple(10**e for e in range(2, 7)),
    "matvec_cols": tuple(10**e for e in range(2, 7)),
    "matvec_square": tuple(10**e for e in range(2, 5)),
    "ttv": tuple(range(100, 1300, 100)),
}

# The rectangular matvec regimes vary one matrix dimension and hold the
# other at this constant.
MATVEC_CONSTANT = 100

DEFAULT_SEED = 12345
DEFAULT_TRIALS = 30
DEFAULT_DENSITY = 0.01
DEFAULT_MODE = 2  # 1-based contraction mode for ttv
DEFAULT_MEM_CAP_BYTES = 8 * 1024**3


@dataclass(frozen=True)
class ExperimentConfig:
    """Validated description of one benchmark run.

    ``mode`` is the 1-based TTV contraction mode as given on the command
    line; operand construction converts it to a 0-based index.
    ``fresh_data_per_trial`` is derived: true for the loop-based kernels,
    false for ttv, where one dataset is shared across all trials.
    """

    experiment: str
    sizes: tuple = None
    n_trials: int = DEFAULT_TRIALS
    density: float = DEFAULT_DENSITY
    mode: int = DEFAULT_MODE
    seed: int = DEFAULT_SEED
    checked: bool = True
    mem_cap_bytes: int = DEFAULT_MEM_CAP_BYTES

    def __post_init__(self):
        if self.experiment not in EXPERIMENTS:
            raise ConfigError(
                f"unknown experiment {self.experiment!r}; "
                f"expected one of {', '.join(EXPERIMENTS)}"
            )
        sizes = self.sizes
        if sizes is None:
            sizes = DEFAULT_SIZES[self.experiment]
        sizes = tuple(int(s) for s in sizes)
        if not sizes or any(s <= 0 for s in sizes):
            raise ConfigError(f"sizes must be positive, got {sizes}")
        object.__setattr__(self, "sizes", sizes)
        n_trials = int(self.n_trials)
        if n_trials < 1:
            raise ConfigError(f"n_trials must be >= 1, got {n_trials}")
        object.__setattr__(self, "n_trials", n_trials)
        density = float(self.density)
        if not 0.0 < density <= 1.0:
            raise ConfigError(f"density must lie in (0, 1], got {density}")
        object.__setattr__(self, "density", density)
        mode = int(self.mode)
        if self.experiment == "ttv" and not 1 <= mode <= 3:
            raise ModeError(
                f"mode {mode} out of range for order-3 tensors (1-based, 1..3)"
            )
        object.__setattr__(self, "mode", mode)
        seed = int(self.seed)
        if not 0 <= seed < 2**64:
            raise ConfigError(f"seed must be an unsigned 64-bit int, got {seed}")
        object.__setattr__(self, "seed", seed)
        if int(self.mem_cap_bytes) < 1:
            raise ConfigError("mem_cap_bytes must be positive")
        object.__setattr__(self, "mem_cap_bytes", int(self.mem_cap_bytes))

    @property
    def fresh_data_per_trial(self) -> bool:
        return self.experiment != "ttv"


@dataclass(frozen=True)
class BenchRecord:
    """One timed call. Field order is the raw CSV column order.

    The warm-up record shares trial index 1 with the first measured
    trial and is distinguished by ``is_warmup``; measured trials run
    1..n_trials. ``seed`` identifies the operand batch used by the call:
    argument j of that batch is generated from derive_arg_seed(seed, j).
    """

    experiment: str
    implementation: str
    size: str
    trial: int
    is_warmup: bool
    elapsed_s: float
    seed: int


@dataclass(frozen=True)
class Summary:
    """Per-(experiment, implementation, size) trial statistics.

    Field order is the summary CSV column order. ``sd_s`` is the sample
    standard deviation (ddof 1); a single-trial group reports 0.0 and is
    flagged by :attr:`degenerate`.
    """

    experiment: str
    implementation: str
    size: str
    n: int
    mean_s: float
    sd_s: float

    @property
    def degenerate(self) -> bool:
        return self.n == 1


# Output of the most recent timed call. Writing every result through a
# module global keeps the calls observable so they cannot be elided.
_sink = None


def _consume(out) -> None:
    global _sink
    _sink = out


def time_once(closure) -> float:
    """Elapsed seconds of one closure call, by monotonic-clock differencing."""
    t0 = time.perf_counter()
    out = closure()
    t1 = time.perf_counter()
    _consume(out)
    return t1 - t0


@dataclass(frozen=True)
class ImplEntry:
    """Registry entry for one implementation label.

    ``make_thunk(experiment, data, checked)`` returns a zero-argument
    closure over the prepared operands. When ``self_timed`` is true the
    closure returns an ``(output, elapsed_s)`` pair measured by the
    implementation's own monotonic clock; otherwise it returns the kernel
    output and the engine times it with :func:`time_once`.
    """

    label: str
    self_timed: bool
    available: object
    unavailable_reason: str
    make_thunk: object
    experiments: tuple = EXPERIMENTS


_REGISTRY = {}


def register_implementation(entry: ImplEntry) -> None:
    """Add or replace a label in the implementation registry."""
    _REGISTRY[entry.label] = entry


def implementations() -> dict:
    """Label-to-entry view of the registry (copy)."""
    return dict(_REGISTRY)


def available_implementations(experiment: str = None) -> list:
    """Labels whose backing runtime is importable, in registration order."""
    return [
        label
        for label, entry in _REGISTRY.items()
        if entry.available() and (experiment is None or experiment in entry.experiments)
    ]


def _resolve(label: str, experiment: str) -> ImplEntry:
    entry = _REGISTRY.get(label)
    if entry is None:
        raise ConfigError(
            f"unknown implementation {label!r}; registered: "
            f"{', '.join(sorted(_REGISTRY))}"
        )
    if not entry.available():
        raise ConfigError(f"implementation {label!r}: {entry.unavailable_reason}")
    if experiment not in entry.experiments:
        raise ConfigError(
            f"implementation {label!r} does not support experiment {experiment!r}"
        )
    return entry


def _native_thunk(experiment, data, checked):
    ck = backend.kernels(backend.COMPILED)
    if experiment == "dot":
        x, y = data["x"], data["y"]
        return lambda: ck.dot_timed(x, y, checked=checked)
    if experiment.startswith("matvec"):
        a, x = data["a"], data["x"]
        return lambda: ck.matvec_timed(a, x, checked=checked)
    t, xv, k0 = data["tensor"], data["x"], data["k0"]
    return lambda: ck.ttv_timed(t.subs, t.vals, t.shape, xv, k0)


def _host_thunk(experiment, data, checked):
    # The label promises the interpreted loop, so even the checked thunk
    # must run _pykernels; routing through the public wrappers would time
    # whichever backend is active instead.
    if experiment == "dot":
        x, y = data["x"], data["y"]
        if checked:
            return lambda: _pykernels.dot(*dense._dot_args(x, y))
        return lambda: _pykernels.dot(x, y)
    if experiment.startswith("matvec"):
        a, x = data["a"], data["x"]
        if checked:
            return lambda: _pykernels.matvec(*dense._matvec_args(a, x))
        return lambda: _pykernels.matvec(a, x)
    t, xv, k0 = data["tensor"], data["x"], data["k0"]
    if checked:

        def thunk():
            v = dense.as_vector(xv)
            sparse._check_ttv_args(t, v, k0)
            return _pykernels.ttv_raw(t.subs, t.vals, t.shape, v, k0)

        return thunk
    return lambda: _pykernels.ttv_raw(t.subs, t.vals, t.shape, xv, k0)


register_implementation(
    ImplEntry(
        label="native-loop",
        self_timed=True,
        available=backend.compiled_available,
        unavailable_reason="compiled extension not built",
        make_thunk=_native_thunk,
    )
)
register_implementation(
    ImplEntry(
        label="host-loop",
        self_timed=False,
        available=lambda: True,
        unavailable_reason="",
        make_thunk=_host_thunk,
    )
)


def size_descriptor(cfg: ExperimentConfig, size: int) -> str:
    """Human-readable size string recorded in every CSV row."""
    if cfg.experiment == "dot":
        return f"n={size}"
    if cfg.experiment == "matvec_rows":
        return f"n1={size},n2={MATVEC_CONSTANT}"
    if cfg.experiment == "matvec_cols":
        return f"n1={MATVEC_CONSTANT},n2={size}"
    if cfg.experiment == "matvec_square":
        return f"n1={size},n2={size}"
    return f"({size},{size},{size},density={cfg.density:g},k={cfg.mode})"


def _matvec_dims(cfg: ExperimentConfig, size: int) -> tuple:
    if cfg.experiment == "matvec_rows":
        return size, MATVEC_CONSTANT
    if cfg.experiment == "matvec_cols":
        return MATVEC_CONSTANT, size
    return size, size


def operand_bytes(cfg: ExperimentConfig, size: int) -> int:
    """Rough peak bytes for one trial's operands, outputs, and scratch."""
    if cfg.experiment == "dot":
        return 16 * size
    if cfg.experiment.startswith("matvec"):
        n1, n2 = _matvec_dims(cfg, size)
        return 8 * (n1 * n2 + n1 + n2)
    nnz = int(round(cfg.density * size**3))
    # tensor (4 columns of 8 bytes) + vector + projected copy, weights,
    # permutation, sort scratch, and the output triple
    return 96 * nnz + 8 * size


def _check_memory(cfg: ExperimentConfig, size: int, descriptor: str) -> None:
    need = operand_bytes(cfg, size)
    if need > cfg.mem_cap_bytes:
        raise SizeCapError(
            f"size {descriptor} needs about {need} operand bytes, over the "
            f"{cfg.mem_cap_bytes}-byte cap"
        )


def derive_trial_seed(master: int, size_index: int, schedule_index: int) -> int:
    """Operand-batch seed for one scheduled call, derived from the master seed.

    Schedule index 0 is the warm-up batch; measured trials use 1..n_trials.
    Deliberately independent of the implementation label so every
    implementation sees identical operand bytes at the same grid point.
    """
    ss = np.random.SeedSequence((master, size_index, schedule_index))
    return int(ss.generate_state(1, np.uint64)[0])


def derive_arg_seed(trial_seed: int, arg_index: int) -> int:
    """Seed for one argument of a trial's operand batch."""
    ss = np.random.SeedSequence((trial_seed, arg_index))
    return int(ss.generate_state(1, np.uint64)[0])


def build_operands(cfg: ExperimentConfig, size: int, trial_seed: int) -> dict:
    """Generate the operand batch identified by ``trial_seed``."""
    if cfg.experiment == "dot":
        return {
            "x": gen_vector(GenSpec(derive_arg_seed(trial_seed, 0), "vector", (size,))),
            "y": gen_vector(GenSpec(derive_arg_seed(trial_seed, 1), "vector", (size,))),
        }
    if cfg.experiment.startswith("matvec"):
        n1, n2 = _matvec_dims(cfg, size)
        return {
            "a": gen_matrix(GenSpec(derive_arg_seed(trial_seed, 0), "matrix", (n1, n2))),
            "x": gen_vector(GenSpec(derive_arg_seed(trial_seed, 1), "vector", (n2,))),
        }
    dims = (size, size, size)
    tensor = gen_sparse3(
        GenSpec(derive_arg_seed(trial_seed, 0), "sparse3", dims, cfg.density)
    )
    xv = gen_vector(GenSpec(derive_arg_seed(trial_seed, 1), "vector", (size,)))
    return {"tensor": tensor, "x": xv, "k0": cfg.mode - 1}


def run_experiment(cfg: ExperimentConfig, impls) -> list:
    """Run the full schedule and return records in execution order.

    Implementations run one after another, never interleaved within a
    size, so one kernel's cache footprint cannot leak into another's
    trials. Operand generation happens outside the timed region.
    """
    impls = list(impls)
    if not impls:
        raise ConfigError("no implementations requested")
    entries = [_resolve(label, cfg.experiment) for label in impls]

    records = []
    for entry in entries:
        for size_index, size in enumerate(cfg.sizes):
            descriptor = size_descriptor(cfg, size)
            _check_memory(cfg, size, descriptor)
            data = None
            batch_seed = None
            for schedule_index in range(cfg.n_trials + 1):
                is_warmup = schedule_index == 0
                if cfg.fresh_data_per_trial or data is None:
                    seed_index = 0 if not cfg.fresh_data_per_trial else schedule_index
                    batch_seed = derive_trial_seed(cfg.seed, size_index, seed_index)
                    data = build_operands(cfg, size, batch_seed)
                thunk = entry.make_thunk(cfg.experiment, data, cfg.checked)
                if entry.self_timed:
                    out, elapsed = thunk()
                    _consume(out)
                else:
                    elapsed = time_once(thunk)
                records.append(
                    BenchRecord(
                        experiment=cfg.experiment,
                        implementation=entry.label,
                        size=descriptor,
                        trial=max(schedule_index, 1),
                        is_warmup=is_warmup,
                        elapsed_s=float(elapsed),
                        seed=batch_seed,
                    )
                )
    return records


def summarize(records) -> list:
    """Mean and sample sd of measured (non-warm-up) trials per group.

    Values are accumulated in trial-index order, so the statistics are
    exactly invariant under any permutation of the input records. Groups
    appear in first-encounter order. A group with no measured trials is
    an error; a single-trial group reports sd 0.0 and degenerate=True.
    """
    groups = {}
    order = []
    for rec in records:
        key = (rec.experiment, rec.implementation, rec.size)
        if key not in groups:
            groups[key] = []
            order.append(key)
        if not rec.is_warmup:
            groups[key].append((rec.trial, rec.elapsed_s))
    out = []
    for key in order:
        trials = sorted(groups[key])
        if not trials:
            raise AggregationError(
                f"group {key} has no measured trials to aggregate"
            )
        values = [v for _, v in trials]
        n = len(values)
        mean = sum(values) / n
        if n == 1:
            sd = 0.0
        else:
            sd = math.sqrt(sum((v - mean) ** 2 for v in values) / (n - 1))
        out.append(
            Summary(
                experiment=key[0],
                implementation=key[1],
                size=key[2],
                n=n,
                mean_s=mean,
                sd_s=sd,
            )
        )
    return out
