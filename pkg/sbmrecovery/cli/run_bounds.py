import os
from pathlib import Path

from dotenv import load_dotenv

from sbmrecovery.bounds.report import BoundReport, compute_bound_report
from sbmrecovery.cli.output import OutputRecord, make_parser, run_command
from sbmrecovery.simulation.config import DEFAULT_ITERATIONS
from sbmrecovery.utils.logging import get_logger, use_sbmrecovery_log_handler

load_dotenv(os.path.join(Path.cwd(), ".env"))

use_sbmrecovery_log_handler("in_root_logger")

logger = get_logger(__name__)

"""
Print every partial-recovery bound for one (a, b) pair

sbm-bounds --a 100 --b 50 --iterations 2 --format text
"""


def main(argv=None) -> int:
    # fmt:off
    parser = make_parser("Partial-recovery bounds for the symmetric two-community block model")
    parser.add_argument("--a", type=float, required=True, help="Intra-community edge parameter (edge probability a/n)")
    parser.add_argument("--b", type=float, required=True, help="Inter-community edge parameter (edge probability b/n)")
    parser.add_argument("--iterations", type=int, default=DEFAULT_ITERATIONS,
                        help="Number of conjectured refinement steps reported after the refined bound")
    # fmt:on
    args = parser.parse_args(argv)

    def body(record: OutputRecord):
        report = compute_bound_report(args.a, args.b, args.iterations)
        record.results = report.to_dict()
        record.provenance = BoundReport.provenance()

    inputs = {"a": args.a, "b": args.b, "iterations": args.iterations}
    return run_command("bounds", inputs, None, args.format, body)


if __name__ == "__main__":
    raise SystemExit(main())
