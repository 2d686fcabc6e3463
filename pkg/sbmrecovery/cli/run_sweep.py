import os
import sys
from pathlib import Path

import numpy as np
from dotenv import load_dotenv

from sbmrecovery.bounds.report import BoundReport
from sbmrecovery.cli.output import COMPARISON_NOTE, OutputRecord, make_parser, run_command
from sbmrecovery.decoders.registry import decoder_names
from sbmrecovery.simulation.config import SimulationConfig
from sbmrecovery.simulation.sweep import SWEEP_HEADER, SWEEP_SCHEMA_VERSION, sweep, write_sweep_csv
from sbmrecovery.simulation.trials import DecoderSpec
from sbmrecovery.utils.exceptions import ParameterError
from sbmrecovery.utils.logging import get_logger, use_sbmrecovery_log_handler

load_dotenv(os.path.join(Path.cwd(), ".env"))

use_sbmrecovery_log_handler("in_root_logger")

logger = get_logger(__name__)

SWEEP_FILENAME = "sweep.csv"
STDOUT_PATH = "-"

"""
Tabulate the bounds (and optionally empirical errors) along a = ratio * b, one CSV row per a

sbm-sweep --a_min 10 --a_max 400 --points 40 --ratio 2 --bounds_only --output fig.csv
"""


def linear_grid(a_min: float, a_max: float, points: int) -> np.ndarray:
    if not a_min > 0:
        raise ParameterError(f"a_min must be > 0, got {a_min}")
    if points < 2:
        raise ParameterError(f"points must be >= 2, got {points}")
    if not a_max > a_min:
        raise ParameterError(f"a_max must be > a_min, got a_min={a_min}, a_max={a_max}")
    return np.linspace(a_min, a_max, points)


def main(argv=None) -> int:
    config = SimulationConfig()
    # fmt:off
    parser = make_parser("Bounds and empirical recovery errors along the line a = ratio * b")
    parser.add_argument("--a_min", type=float, required=True, help="Smallest value of a")
    parser.add_argument("--a_max", type=float, required=True, help="Largest value of a")
    parser.add_argument("--points", type=int, default=40, help="Number of evenly spaced values of a")
    parser.add_argument("--ratio", type=float, default=2.0, help="a / b along the sweep")
    parser.add_argument("--n", type=int, default=400, help="Number of nodes of the simulated graphs")
    parser.add_argument("--decoder", choices=decoder_names(), default=config.decoder, help="Decoder to evaluate")
    parser.add_argument("--bounds_only", action="store_true", help="Skip the simulation; empirical columns stay empty")
    parser.add_argument("--trials", type=int, default=config.trials, help="Monte Carlo trials per point")
    parser.add_argument("--seed", type=int, default=0, help="Master seed; per-point seeds are derived from it")
    parser.add_argument("--restarts", type=int, default=config.restarts,
                        help="Local-search restarts for the bisection-based decoders")
    parser.add_argument("--workers", type=int, default=config.workers, help="Worker processes for the trials")
    parser.add_argument("--iterations", type=int, default=config.iterations,
                        help="Number of conjectured refinement steps computed after the refined bound")
    parser.add_argument("--output", type=str, default=config.output_path(SWEEP_FILENAME),
                        help=f"CSV destination; '{STDOUT_PATH}' writes the table to stdout")
    # fmt:on
    args = parser.parse_args(argv)

    def body(record: OutputRecord):
        a_values = linear_grid(args.a_min, args.a_max, args.points)
        decoder = None if args.bounds_only else DecoderSpec(args.decoder, args.restarts)
        rows = sweep(
            a_values.tolist(), args.ratio, args.n, decoder, args.trials, args.seed, args.iterations, args.workers
        )

        if args.output == STDOUT_PATH:
            write_sweep_csv(rows, sys.stdout)
        else:
            with open(args.output, "w", newline="") as f:
                write_sweep_csv(rows, f)
            logger.info(f"Wrote {len(rows)} rows to {args.output}")

        failed = [row for row in rows if row.error is not None]
        record.results = {
            "schema_version": SWEEP_SCHEMA_VERSION,
            "columns": list(SWEEP_HEADER),
            "rows": len(rows),
            "failed": [{"a": row.a, "error": row.error} for row in failed],
            "output": args.output,
            "comparison": COMPARISON_NOTE,
        }
        record.provenance = BoundReport.provenance()
        if failed:
            record.error = f"{len(failed)} of {len(rows)} sweep points failed"

    inputs = {
        "a_min": args.a_min,
        "a_max": args.a_max,
        "points": args.points,
        "ratio": args.ratio,
        "n": args.n,
        "decoder": None if args.bounds_only else args.decoder,
        "trials": args.trials,
        "iterations": args.iterations,
    }
    # with the table on stdout the summary record goes to stderr
    stream = sys.stderr if args.output == STDOUT_PATH else None
    return run_command("sweep", inputs, args.seed, args.format, body, stream)


if __name__ == "__main__":
    raise SystemExit(main())
