"""Command-line entry point.

Subcommands:
  compare   benchmark several implementation labels, write merged raw
            and summary CSVs, and draw a log-log runtime-vs-size plot
  overhead  estimate first-call overhead across fresh processes and
            write one CSV row per size

Exit codes: 0 success, 2 usage, 3 validation failure, 4 I/O failure.
The TENKERN_SEED environment variable replaces the built-in default
seed; an explicit --seed beats both.
"""

import argparse
import os
import sys

import tenkern
from tenkern import ConfigError, TenkernError

from tenhost import compare, overhead

__all__ = ["main"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tenhost",
        description="Host-side comparison harness for the tenkern kernels",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument(
            "--experiment",
            required=True,
            choices=tenkern.EXPERIMENTS,
            help="kernel experiment to run",
        )
        p.add_argument(
            "--sizes",
            nargs="+",
            type=int,
            default=None,
            help="size grid (default: the experiment's standard grid)",
        )
        p.add_argument(
            "--trials",
            type=int,
            default=tenkern.DEFAULT_TRIALS,
            help="measured trials per (implementation, size) (default 30)",
        )
        p.add_argument(
            "--density",
            type=float,
            default=tenkern.DEFAULT_DENSITY,
            help="nonzero fraction for ttv (default 0.01)",
        )
        p.add_argument(
            "--mode",
            type=int,
            default=tenkern.DEFAULT_MODE,
            help="1-based ttv contraction mode (default 2)",
        )
        p.add_argument(
            "--seed",
            type=int,
            default=None,
            help="master seed (default: TENKERN_SEED or 12345)",
        )
        p.add_argument("--out", required=True, help="output CSV path")

    p_cmp = sub.add_parser("compare", help="benchmark several labels side by side")
    add_common(p_cmp)
    p_cmp.add_argument(
        "--labels",
        nargs="+",
        default=None,
        help="implementation labels to compare (default: all available)",
    )
    p_cmp.add_argument(
        "--plots-dir",
        default=None,
        help="directory for plot images (default: directory of --out)",
    )
    p_cmp.add_argument(
        "--unchecked",
        action="store_true",
        help="disable validation inside the timed region",
    )

    p_ovh = sub.add_parser(
        "overhead", help="estimate first-call overhead in fresh processes"
    )
    add_common(p_ovh)
    p_ovh.add_argument(
        "--label",
        required=True,
        help="implementation label to estimate",
    )
    p_ovh.add_argument(
        "--repeats",
        type=int,
        default=10,
        help="fresh processes per size (default 10)",
    )

    return parser


def _resolve_seed(arg_seed):
    if arg_seed is not None:
        return int(arg_seed)
    env = os.environ.get("TENKERN_SEED")
    if env is None:
        return tenkern.DEFAULT_SEED
    try:
        return int(env)
    except ValueError:
        raise ConfigError(f"TENKERN_SEED must be an integer, got {env!r}")


def _cmd_compare(args) -> int:
    cfg = tenkern.ExperimentConfig(
        experiment=args.experiment,
        sizes=args.sizes,
        n_trials=args.trials,
        density=args.density,
        mode=args.mode,
        seed=_resolve_seed(args.seed),
        checked=not args.unchecked,
    )
    result = compare.run_comparison(
        cfg,
        args.labels,
        out=args.out,
        plots_dir=args.plots_dir,
        report=lambda msg: print(f"warning: {msg}", file=sys.stderr),
    )
    print(f"wrote {len(result.records)} records to {result.csv_path}")
    print(f"wrote summary to {result.summary_csv_path}")
    for path in result.plot_paths:
        print(f"wrote plot to {path}")
    for label, why in result.skipped:
        print(f"skipped {label}: {why}", file=sys.stderr)
    return 0


def _cmd_overhead(args) -> int:
    seed = _resolve_seed(args.seed)
    sizes = args.sizes
    if sizes is None:
        sizes = tenkern.DEFAULT_SIZES[args.experiment]
    estimates = []
    for size in sizes:
        est = overhead.estimate_overhead(
            args.label,
            size,
            experiment=args.experiment,
            n_trials=args.trials,
            repeats=args.repeats,
            seed=seed,
            density=args.density if args.experiment == "ttv" else None,
            mode=args.mode if args.experiment == "ttv" else None,
            report=lambda msg: print(f"warning: {msg}", file=sys.stderr),
        )
        estimates.append(est)
        print(
            f"{est.kernel} at {est.size}: first call {est.first_call_mean_s:.3e}s, "
            f"steady {est.steady_mean_s:.3e}s, overhead {est.overhead_s:.3e}s "
            f"({est.repeats} repeats)"
        )
    overhead.write_overhead_csv(estimates, args.out)
    print(f"wrote {len(estimates)} estimates to {args.out}")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if not exc.code else 2
    handlers = {"compare": _cmd_compare, "overhead": _cmd_overhead}
    try:
        return handlers[args.command](args)
    except TenkernError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
