"""Command-line entry point.

Subcommands:
  bench   run one experiment and write raw records as CSV
  verify  run the built-in verification suites
  gen     emit one operand batch to an .npz file for cross-boundary tests

Exit codes: 0 success, 2 usage, 3 validation failure, 4 I/O failure.
The TENKERN_SEED environment variable replaces the built-in default
seed; an explicit --seed beats both.
"""

import argparse
import json
import os
import sys

import numpy as np

from tenkern import backend, bench, csvio, selfcheck
from tenkern.errors import ConfigError, TenkernError
from tenkern.synth import GENERATOR

__all__ = ["main"]


class _UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tenkern",
        description="Tensor-kernel benchmark harness",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, need_out):
        p.add_argument(
            "--experiment",
            required=True,
            choices=bench.EXPERIMENTS,
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
            "--density",
            type=float,
            default=bench.DEFAULT_DENSITY,
            help="nonzero fraction for ttv (default 0.01)",
        )
        p.add_argument(
            "--mode",
            type=int,
            default=bench.DEFAULT_MODE,
            help="1-based ttv contraction mode (default 2)",
        )
        p.add_argument(
            "--seed",
            type=int,
            default=None,
            help="master seed (default: TENKERN_SEED or 12345)",
        )
        p.add_argument("--out", required=need_out, help="output file path")

    p_bench = sub.add_parser("bench", help="run a benchmark experiment")
    add_common(p_bench, need_out=True)
    p_bench.add_argument(
        "--trials",
        type=int,
        default=bench.DEFAULT_TRIALS,
        help="measured trials per (implementation, size) (default 30)",
    )
    p_bench.add_argument(
        "--impl",
        action="append",
        default=None,
        help="implementation label; repeatable (default: all available)",
    )
    p_bench.add_argument(
        "--unchecked",
        action="store_true",
        help="disable validation inside the timed region",
    )

    sub.add_parser("verify", help="run the verification suites")

    p_gen = sub.add_parser("gen", help="write one operand batch to .npz")
    add_common(p_gen, need_out=True)

    return parser


def _resolve_seed(arg_seed):
    if arg_seed is not None:
        return int(arg_seed)
    env = os.environ.get("TENKERN_SEED")
    if env is None:
        return bench.DEFAULT_SEED
    try:
        return int(env)
    except ValueError:
        raise ConfigError(f"TENKERN_SEED must be an integer, got {env!r}")


def _write_meta(path, payload) -> None:
    with open(f"{path}.meta.json", "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _cmd_bench(args) -> int:
    cfg = bench.ExperimentConfig(
        experiment=args.experiment,
        sizes=args.sizes,
        n_trials=args.trials,
        density=args.density,
        mode=args.mode,
        seed=_resolve_seed(args.seed),
        checked=not args.unchecked,
    )
    impls = args.impl or bench.available_implementations(cfg.experiment)
    if not impls:
        raise ConfigError("no implementations available for this experiment")
    records = bench.run_experiment(cfg, impls)
    csvio.write_csv(records, args.out)
    _write_meta(
        args.out,
        {
            "schema": "raw-records-v1",
            "generator": GENERATOR,
            "experiment": cfg.experiment,
            "sizes": list(cfg.sizes),
            "n_trials": cfg.n_trials,
            "density": cfg.density,
            "mode": cfg.mode,
            "master_seed": cfg.seed,
            "implementations": list(impls),
            "checked": cfg.checked,
            "active_backend": backend.active_backend(),
        },
    )
    print(f"wrote {len(records)} records to {args.out}")
    return 0


def _cmd_verify(args) -> int:
    ok = selfcheck.run_all(print)
    return 0 if ok else 3


def _cmd_gen(args) -> int:
    cfg = bench.ExperimentConfig(
        experiment=args.experiment,
        sizes=args.sizes,
        density=args.density,
        mode=args.mode,
        seed=_resolve_seed(args.seed),
    )
    if len(cfg.sizes) != 1:
        raise _UsageError("gen takes exactly one value in --sizes")
    size = cfg.sizes[0]
    # Reproduce the batch a bench run would use: the shared dataset for
    # ttv (schedule 0), the first measured trial's batch otherwise.
    schedule_index = 0 if cfg.experiment == "ttv" else 1
    batch_seed = bench.derive_trial_seed(cfg.seed, 0, schedule_index)
    data = bench.build_operands(cfg, size, batch_seed)

    if cfg.experiment == "dot":
        payload = {"x": data["x"], "y": data["y"]}
    elif cfg.experiment.startswith("matvec"):
        payload = {"a": data["a"], "x": data["x"]}
    else:
        t = data["tensor"]
        payload = {
            "subs": t.subs,
            "vals": t.vals,
            "shape": np.asarray(t.shape, dtype=np.int64),
            "x": data["x"],
            "k0": np.int64(data["k0"]),
        }
    out = args.out if args.out.endswith(".npz") else f"{args.out}.npz"
    with open(out, "wb") as fh:
        np.savez(fh, **payload)
    _write_meta(
        out,
        {
            "schema": "operand-batch-v1",
            "generator": GENERATOR,
            "experiment": cfg.experiment,
            "size": size,
            "density": cfg.density,
            "mode": cfg.mode,
            "master_seed": cfg.seed,
            "batch_seed": batch_seed,
            "arrays": sorted(payload),
        },
    )
    print(f"wrote operand batch to {out}")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if not exc.code else 2
    handlers = {"bench": _cmd_bench, "verify": _cmd_verify, "gen": _cmd_gen}
    try:
        return handlers[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except TenkernError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
