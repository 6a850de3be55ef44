"""Command-line front end.

Three subcommands:

* ``estimate``  — run one estimator on a text file of samples
* ``gen-fgn``   — write a reproducible fractional-noise path
* ``bench``     — run the white-noise or fractional-noise suite into TSVs

Exit codes: 0 success, 1 argument/usage problems, 2 data or convergence
problems (unparsable series, degenerate input, non-convergence).
"""

import argparse
import json
import os
import sys

from .bench import run_fgn_suite, run_random_suite
from .errors import ArgumentError, DataError
from .generators import FgnSpec
from .harness import estimate_file, write_fgn
from .results import METHODS


def parse_h_grid(text):
    """Parse '0.3:0.8:0.05' (inclusive, rounded steps) or a single '0.55'."""
    parts = text.split(":")
    try:
        if len(parts) == 1:
            return [float(parts[0])]
        if len(parts) != 3:
            raise ValueError
        start, stop, step = (float(p) for p in parts)
    except ValueError:
        raise ArgumentError(
            f"bad grid {text!r}; expected START:STOP:STEP or a single value"
        ) from None
    if step <= 0 or stop < start:
        raise ArgumentError(f"bad grid {text!r}; need STOP >= START and STEP > 0")
    count = int((stop - start) / step + 1e-9)
    return [round(start + i * step, 10) for i in range(count + 1)]


def _add_estimator_flags(sub):
    sub.add_argument("--window", type=int, default=None,
                     help="partition window w (default 50)")
    sub.add_argument("--norm", type=int, choices=(1, 2), default=None,
                     help="regression norm: 1 robust, 2 least squares")
    sub.add_argument("--q-order", dest="q_order", type=float, default=None,
                     help="moment order for ghe (default 1)")
    sub.add_argument("--cutoff", type=float, default=None,
                     help="periodogram frequency cutoff (default 0.1)")
    sub.add_argument("--weight-p", dest="weight_p", type=float, default=None,
                     help="block-sum fit weight (default: 2 lssd, 6 lsv)")
    sub.add_argument("--penalty-q", dest="penalty_q", type=float, default=None,
                     help="penalty exponent for lssd/lsv (default 50)")
    sub.add_argument("--epsilon", type=float, default=None,
                     help="solver precision for lssd/lsv (default 1e-4)")
    sub.add_argument("--rs-corrected", dest="corrected", action="store_true",
                     default=None, help="apply the small-sample R/S correction")


def _config(args):
    keys = ("window", "norm", "q_order", "cutoff", "weight_p", "penalty_q",
            "epsilon", "corrected")
    return {k: getattr(args, k) for k in keys if getattr(args, k) is not None}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hurstkit",
        description="Hurst exponent estimation toolkit (13 methods).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    est = sub.add_parser("estimate", help="estimate H for a series file")
    est.add_argument("--input", required=True, help="text file, one value per line")
    est.add_argument("--method", required=True,
                     help=f"one of: {', '.join(METHODS)}")
    est.add_argument("--format", choices=("json", "tsv"), default="json")
    _add_estimator_flags(est)

    gen = sub.add_parser("gen-fgn", help="generate a fractional-noise file")
    gen.add_argument("--hurst", type=float, required=True)
    gen.add_argument("--length", type=int, required=True)
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--output", required=True)

    bench = sub.add_parser("bench", help="run a benchmark suite")
    bench.add_argument("suite", choices=("random", "fgn"))
    bench.add_argument("--replicates", type=int, default=10)
    bench.add_argument("--length", type=int, default=None)
    bench.add_argument("--seed", type=int, default=42)
    bench.add_argument("--h-grid", dest="h_grid", default="0.3:0.7:0.2",
                       help="fgn targets as START:STOP:STEP (default 0.3:0.7:0.2)")
    bench.add_argument("--out", required=True, help="directory for the TSVs")
    _add_estimator_flags(bench)

    return parser


def _cmd_estimate(args):
    result = estimate_file(args.input, args.method, **_config(args))
    if args.format == "json":
        print(json.dumps(result.to_dict()))
    else:
        pairs = [("method", result.method), ("hurst", repr(result.hurst))]
        pairs += [(f"config.{k}", repr(v)) for k, v in result.config.items()]
        pairs += [(f"diagnostics.{k}", repr(v))
                  for k, v in result.diagnostics.items()]
        print("\n".join(f"{k}\t{v}" for k, v in pairs))
    return 0


def _cmd_gen_fgn(args):
    write_fgn(args.output, FgnSpec(args.hurst, args.length, args.seed))
    return 0


def _cmd_bench(args):
    config = _config(args)
    if args.suite == "random":
        report = run_random_suite(
            replicates=args.replicates,
            length=args.length if args.length is not None else 10000,
            seed=args.seed,
            config=config,
        )
    else:
        report = run_fgn_suite(
            h_values=parse_h_grid(args.h_grid),
            replicates=args.replicates,
            length=args.length if args.length is not None else 30000,
            seed=args.seed,
            config=config,
        )
    os.makedirs(args.out, exist_ok=True)
    matrix_path = os.path.join(args.out, f"{report.suite}_matrix.tsv")
    long_path = os.path.join(args.out, f"{report.suite}_long.tsv")
    with open(matrix_path, "w", encoding="utf-8") as fh:
        fh.write(report.to_matrix_tsv())
    with open(long_path, "w", encoding="utf-8") as fh:
        fh.write(report.to_long_tsv())
    print(matrix_path)
    print(long_path)
    return 0


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses status 2 for usage errors; that slot is reserved
        # for data errors here
        return 0 if exc.code in (0, None) else 1

    handlers = {
        "estimate": _cmd_estimate,
        "gen-fgn": _cmd_gen_fgn,
        "bench": _cmd_bench,
    }
    try:
        return handlers[args.command](args)
    except ArgumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
