"""Output records shared by the command-line tools, and the parser/error plumbing around them"""

import argparse
import dataclasses
import json
import sys
from typing import Any, Callable, Dict, List, Optional, TextIO, Tuple

import configargparse

from sbmrecovery.utils.exceptions import Error
from sbmrecovery.utils.logging import get_logger

logger = get_logger(__name__)

SCHEMA_VERSION = 1
EXIT_OK = 0
EXIT_ERROR = 2
TEXT_DIGITS = 6
DEFAULT_CONFIG_FILES = ["sbmrecovery.yml"]
COMPARISON_NOTE = "asymptotic claim, finite-n check"


@dataclasses.dataclass
class OutputRecord:
    command: str
    inputs: Dict[str, Any]
    results: Dict[str, Any] = dataclasses.field(default_factory=dict)
    provenance: Dict[str, str] = dataclasses.field(default_factory=dict)  # bound name -> "theorem" | "conjecture"
    seed: Optional[int] = None
    error: Optional[str] = None
    schema_version: int = SCHEMA_VERSION

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema_version": self.schema_version,
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "provenance": self.provenance,
            "seed": self.seed,
            "error": self.error,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, allow_nan=False)


def _flatten(prefix: str, value: Any) -> List[Tuple[str, Any]]:
    if isinstance(value, dict):
        items = []
        for key, inner in value.items():
            items.extend(_flatten(f"{prefix}.{key}" if prefix else str(key), inner))
        return items
    return [(prefix, value)]


def _format_value(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return f"{value:.{TEXT_DIGITS}g}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_format_value(item) for item in value) + "]"
    return str(value)


def format_text(record: OutputRecord) -> str:
    """Aligned ``key  value`` lines with floats rounded to six significant digits"""
    rows = _flatten("", {k: v for k, v in record.to_dict().items() if k != "provenance"})
    rows += [(f"provenance.{name}", tag) for name, tag in record.provenance.items()]
    width = max(len(key) for key, _ in rows)
    return "\n".join(f"{key.ljust(width)}  {_format_value(value)}" for key, value in rows)


def emit(record: OutputRecord, output_format: str = "json", stream: Optional[TextIO] = None) -> None:
    stream = stream or sys.stdout
    stream.write(record.to_json() if output_format == "json" else format_text(record))
    stream.write("\n")
    stream.flush()


def make_parser(description: str, formats: Tuple[str, ...] = ("json", "text")) -> configargparse.ArgParser:
    parser = configargparse.ArgParser(
        description=description,
        default_config_files=DEFAULT_CONFIG_FILES,
        config_file_parser_class=configargparse.YAMLConfigFileParser,
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add("-c", "--config", required=False, is_config_file=True, help="config file path")
    parser.add_argument("--format", choices=formats, default=formats[0], help="output format")
    return parser


def run_command(
    command: str,
    inputs: Dict[str, Any],
    seed: Optional[int],
    output_format: str,
    body: Callable[[OutputRecord], None],
    stream: Optional[TextIO] = None,
) -> int:
    """
    Run ``body`` on a fresh record and print the record. Package errors, invalid values and I/O failures are logged,
    stored in ``record.error`` and turn into exit status 2.
    """
    record = OutputRecord(command=command, inputs=inputs, seed=seed)
    try:
        body(record)
    except (Error, ValueError, OSError) as e:
        logger.error(f"{command} failed: {e}")
        record.results, record.error = {}, str(e)
    emit(record, output_format, stream)
    return EXIT_OK if record.error is None else EXIT_ERROR
