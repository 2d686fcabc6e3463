import os
from pathlib import Path

from dotenv import load_dotenv

from sbmrecovery.cli.output import OutputRecord, make_parser, run_command
from sbmrecovery.model.generator import generate
from sbmrecovery.model.graph import format_labels, write_edge_list
from sbmrecovery.model.labels import imbalance_check
from sbmrecovery.model.params import SbmParams
from sbmrecovery.simulation.config import SimulationConfig
from sbmrecovery.utils.logging import get_logger, use_sbmrecovery_log_handler

load_dotenv(os.path.join(Path.cwd(), ".env"))

use_sbmrecovery_log_handler("in_root_logger")

logger = get_logger(__name__)

GRAPH_FILENAME = "graph.txt"
LABELS_SUFFIX = ".labels"

"""
Draw one instance of the block model and dump it for reproducibility

sbm-generate --a 6 --b 3 --n 500 --seed 11 --output graph.txt
"""


def main(argv=None) -> int:
    config = SimulationConfig()
    # fmt:off
    parser = make_parser("Draw one labeled graph from the symmetric two-community block model")
    parser.add_argument("--a", type=float, required=True, help="Intra-community edge parameter (edge probability a/n)")
    parser.add_argument("--b", type=float, required=True, help="Inter-community edge parameter (edge probability b/n)")
    parser.add_argument("--n", type=int, required=True, help="Number of nodes")
    parser.add_argument("--seed", type=int, default=0, help="Seed of the labels and the edges")
    parser.add_argument("--output", type=str, default=config.output_path(GRAPH_FILENAME),
                        help=f"Edge-list destination; the labels go to the same path with a '{LABELS_SUFFIX}' suffix")
    # fmt:on
    args = parser.parse_args(argv)

    def body(record: OutputRecord):
        params = SbmParams(a=args.a, b=args.b, n=args.n)
        labels, graph = generate(params, args.seed)
        labels_path = args.output + LABELS_SUFFIX
        with open(args.output, "w") as f:
            write_edge_list(graph, f)
        with open(labels_path, "w") as f:
            f.write(format_labels(labels) + "\n")
        logger.info(f"Wrote {graph} to {args.output} and its labels to {labels_path}")

        stats = imbalance_check(labels)
        record.results = {
            "edges": graph.num_edges,
            "community_sizes": [stats.n1, stats.n2],
            "delta": stats.delta,
            "hoeffding_ok": stats.hoeffding_ok,
            "edge_list": args.output,
            "labels": labels_path,
        }

    inputs = {"a": args.a, "b": args.b, "n": args.n}
    return run_command("generate", inputs, args.seed, args.format, body)


if __name__ == "__main__":
    raise SystemExit(main())
