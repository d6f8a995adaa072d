"""Subprocess entry point for overhead repeats.

Runs the benchmark schedule for one implementation label at one size in
this (fresh) interpreter and writes the raw-records CSV to the path
given as the first positional argument. Exit code 0 on success; any
failure exits nonzero so the parent discards the repeat.
"""

import argparse
import sys


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="tenhost-child")
    parser.add_argument("out")
    parser.add_argument("--experiment", required=True)
    parser.add_argument("--impl", required=True)
    parser.add_argument("--size", type=int, required=True)
    parser.add_argument("--trials", type=int, required=True)
    parser.add_argument("--seed", type=int, required=True)
    parser.add_argument("--density", type=float, default=None)
    parser.add_argument("--mode", type=int, default=None)
    args = parser.parse_args(argv)

    # Deferred so the timed first call sees a process that has merely
    # imported the packages, the same state a benchmark script starts in.
    import tenhost  # noqa: F401  (import registers the host-side labels)
    import tenkern

    extra = {}
    if args.density is not None:
        extra["density"] = args.density
    if args.mode is not None:
        extra["mode"] = args.mode
    cfg = tenkern.ExperimentConfig(
        experiment=args.experiment,
        sizes=(args.size,),
        n_trials=args.trials,
        seed=args.seed,
        **extra,
    )
    records = tenkern.run_experiment(cfg, [args.impl])
    tenkern.write_csv(records, args.out)
    return 0


if __name__ == "__main__":
    try:
        code = main()
    except Exception as exc:
        print(f"tenhost._child: {exc}", file=sys.stderr)
        code = 1
    sys.exit(code)
