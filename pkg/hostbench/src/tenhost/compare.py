"""Comparison runner: many implementation labels, one merged artifact set.

Runs the benchmark schedule once per label, merges the records into a
single raw CSV, writes a summary CSV next to it, and draws one log-log
mean-runtime-versus-size plot per run. Labels that cannot run (missing
optional runtime, compile failure) are skipped with a warning so the
comparison degrades instead of dying; operand identity across labels is
unaffected because trial seeds never depend on the implementation.
"""

from dataclasses import dataclass
from pathlib import Path

import tenkern
from tenkern import ConfigError, TenkernError

__all__ = ["ComparisonResult", "run_comparison"]

_X_LABELS = {
    "dot": "vector size n",
    "matvec_rows": "matrix rows n1 (columns fixed)",
    "matvec_cols": "matrix columns n2 (rows fixed)",
    "matvec_square": "matrix size n (n x n)",
    "ttv": "cube edge n (n x n x n tensor)",
}


@dataclass(frozen=True)
class ComparisonResult:
    """Artifacts of one comparison run."""

    records: tuple
    summaries: tuple
    csv_path: str
    summary_csv_path: str
    plot_paths: tuple
    skipped: tuple


def _report(report, message: str) -> None:
    if report is None:
        import warnings

        warnings.warn(message, RuntimeWarning, stacklevel=3)
    else:
        report(message)


def _load_pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def _emit_plot(cfg, summaries, plots_dir, report):
    try:
        plt = _load_pyplot()
    except ImportError as exc:
        _report(report, f"plotting skipped (CSV still written): {exc}")
        return []
    plots_dir = Path(plots_dir)
    plots_dir.mkdir(parents=True, exist_ok=True)
    size_of = {tenkern.size_descriptor(cfg, s): s for s in cfg.sizes}
    labels = []
    for s in summaries:
        if s.implementation not in labels:
            labels.append(s.implementation)
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    for label in labels:
        points = sorted(
            (size_of[s.size], s.mean_s)
            for s in summaries
            if s.implementation == label
        )
        ax.plot(
            [p[0] for p in points],
            [p[1] for p in points],
            marker="o",
            label=label,
        )
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel(_X_LABELS[cfg.experiment])
    ax.set_ylabel("mean runtime (s)")
    ax.set_title(f"{cfg.experiment}: mean runtime vs size")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    path = plots_dir / f"{cfg.experiment}.png"
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return [str(path)]


def run_comparison(cfg, labels=None, *, out, plots_dir=None, report=None):
    """Benchmark ``labels`` under ``cfg`` and write CSVs plus a plot.

    ``labels`` defaults to every registered implementation available for
    the experiment. A label that fails to run is skipped with a warning;
    an unknown label is an error. Returns a :class:`ComparisonResult`;
    ``plots_dir`` defaults to the directory of ``out``.
    """
    if labels is None:
        labels = tenkern.available_implementations(cfg.experiment)
        if not labels:
            raise ConfigError(
                f"no implementation available for experiment {cfg.experiment!r}"
            )
    else:
        registered = tenkern.implementations()
        for label in labels:
            if label not in registered:
                raise ConfigError(
                    f"unknown implementation {label!r}; registered: "
                    f"{', '.join(sorted(registered))}"
                )

    records = []
    skipped = []
    for label in labels:
        try:
            records.extend(tenkern.run_experiment(cfg, [label]))
        except TenkernError as exc:
            skipped.append((label, str(exc)))
            _report(report, f"skipping implementation {label!r}: {exc}")
    if not records:
        raise ConfigError(
            "no requested implementation could run: "
            + "; ".join(f"{lab}: {why}" for lab, why in skipped)
        )

    out = Path(out)
    tenkern.write_csv(records, out)
    summaries = tenkern.summarize(records)
    summary_path = out.with_name(f"{out.stem}-summary{out.suffix or '.csv'}")
    tenkern.write_csv(summaries, summary_path)

    plot_paths = _emit_plot(
        cfg, summaries, plots_dir if plots_dir is not None else out.parent, report
    )
    return ComparisonResult(
        records=tuple(records),
        summaries=tuple(summaries),
        csv_path=str(out),
        summary_csv_path=str(summary_path),
        plot_paths=tuple(plot_paths),
        skipped=tuple(skipped),
    )
