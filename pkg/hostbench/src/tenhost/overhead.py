"""First-call overhead estimation across fresh host processes.

Boundary crossings and JIT compilation charge their setup to the first
invocation in a process, and that state cannot be reset in-process. So
each repeat launches a fresh interpreter which times the first call and
``n_trials`` calls after it, and the estimate is the difference of the
two averages across repeats. What the first call actually spends its
extra time on (crossing setup, type conversion, machine-code
compilation) is not attributed; the estimate is the aggregate.
"""

import csv
import os
import subprocess
import sys
import tempfile
import warnings
from dataclasses import dataclass

import tenkern
from tenkern import ConfigError

from tenhost.errors import EstimationError

__all__ = ["OverheadEstimate", "estimate_overhead", "write_overhead_csv"]

OVERHEAD_COLUMNS = (
    "kernel",
    "size",
    "first_call_mean_s",
    "steady_mean_s",
    "overhead_s",
    "repeats",
)


@dataclass(frozen=True)
class OverheadEstimate:
    """First-call cost of one implementation label at one size.

    ``overhead_s == first_call_mean_s - steady_mean_s``; ``repeats`` is
    the number of fresh processes that contributed (failed ones are
    discarded), always at least 1.
    """

    kernel: str
    size: str
    first_call_mean_s: float
    steady_mean_s: float
    overhead_s: float
    repeats: int


def _report(report, message: str) -> None:
    if report is None:
        warnings.warn(message, RuntimeWarning, stacklevel=3)
    else:
        report(message)


def _check_label(label: str, experiment: str) -> None:
    entry = tenkern.implementations().get(label)
    if entry is None:
        raise ConfigError(
            f"unknown implementation {label!r}; registered: "
            f"{', '.join(sorted(tenkern.implementations()))}"
        )
    if not entry.available():
        raise ConfigError(f"implementation {label!r}: {entry.unavailable_reason}")
    if experiment not in entry.experiments:
        raise ConfigError(
            f"implementation {label!r} does not support experiment {experiment!r}"
        )


def estimate_overhead(
    label: str,
    size: int,
    *,
    experiment: str = "dot",
    n_trials: int = 30,
    repeats: int = 10,
    seed: int = tenkern.DEFAULT_SEED,
    density: float = None,
    mode: int = None,
    timeout_s: float = 600.0,
    report=None,
) -> OverheadEstimate:
    """Estimate the first-call overhead of ``label`` at one data size.

    Launches ``repeats`` fresh interpreter processes; each runs the
    benchmark schedule for exactly this label and size and writes the
    raw-records CSV, in which the warm-up record is the process's first
    call. A repeat whose process fails is discarded and reported through
    ``report`` (default: a RuntimeWarning); if every repeat fails an
    EstimationError is raised. The same master seed is used in every
    repeat so only process state varies.
    """
    if repeats < 1:
        raise ConfigError(f"repeats must be at least 1, got {repeats}")
    extra = {}
    if density is not None:
        extra["density"] = density
    if mode is not None:
        extra["mode"] = mode
    cfg = tenkern.ExperimentConfig(
        experiment=experiment, sizes=(size,), n_trials=n_trials, seed=seed, **extra
    )
    _check_label(label, experiment)
    descriptor = tenkern.size_descriptor(cfg, size)

    firsts = []
    steadies = []
    with tempfile.TemporaryDirectory(prefix="tenhost-overhead-") as tmp:
        for r in range(repeats):
            out = os.path.join(tmp, f"repeat-{r}.csv")
            cmd = [
                sys.executable,
                "-m",
                "tenhost._child",
                out,
                "--experiment",
                experiment,
                "--impl",
                label,
                "--size",
                str(size),
                "--trials",
                str(n_trials),
                "--seed",
                str(seed),
            ]
            if density is not None:
                cmd += ["--density", str(density)]
            if mode is not None:
                cmd += ["--mode", str(mode)]
            try:
                proc = subprocess.run(
                    cmd, capture_output=True, text=True, timeout=timeout_s
                )
            except subprocess.TimeoutExpired:
                _report(
                    report,
                    f"overhead repeat {r + 1}/{repeats} for {label!r} discarded: "
                    f"timed out after {timeout_s:g}s",
                )
                continue
            if proc.returncode != 0:
                detail = proc.stderr.strip().splitlines()
                _report(
                    report,
                    f"overhead repeat {r + 1}/{repeats} for {label!r} discarded: "
                    f"exit {proc.returncode}"
                    + (f": {detail[-1]}" if detail else ""),
                )
                continue
            records = tenkern.read_csv(out)
            first = [rec.elapsed_s for rec in records if rec.is_warmup]
            steady = [rec.elapsed_s for rec in records if not rec.is_warmup]
            firsts.append(first[0])
            steadies.append(sum(steady) / len(steady))
    if not firsts:
        raise EstimationError(
            f"all {repeats} overhead repeats for {label!r} at {descriptor} failed"
        )
    first_mean = sum(firsts) / len(firsts)
    steady_mean = sum(steadies) / len(steadies)
    return OverheadEstimate(
        kernel=label,
        size=descriptor,
        first_call_mean_s=first_mean,
        steady_mean_s=steady_mean,
        overhead_s=first_mean - steady_mean,
        repeats=len(firsts),
    )


def write_overhead_csv(estimates, path) -> None:
    """Write estimates as CSV (17 significant digits, one row per estimate)."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(OVERHEAD_COLUMNS)
        for est in estimates:
            writer.writerow(
                [
                    est.kernel,
                    est.size,
                    f"{est.first_call_mean_s:.17g}",
                    f"{est.steady_mean_s:.17g}",
                    f"{est.overhead_s:.17g}",
                    est.repeats,
                ]
            )
