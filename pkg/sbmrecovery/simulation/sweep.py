"""Bounds and empirical errors along a line a = ratio * b, one table row per value of a"""

import csv
import dataclasses
from typing import List, Optional, Sequence, TextIO

from sbmrecovery.bounds.report import BoundReport, compute_bound_report
from sbmrecovery.model.params import SbmParams
from sbmrecovery.simulation.config import DEFAULT_ITERATIONS
from sbmrecovery.simulation.trials import DecoderSpec, TrialPlan, TrialStats, run_trials
from sbmrecovery.utils.exceptions import ParameterError
from sbmrecovery.utils.logging import get_logger
from sbmrecovery.utils.seeding import derive_seed

logger = get_logger(__name__)

SWEEP_SCHEMA_VERSION = 1
SWEEP_HEADER = ("a", "b", "necessary", "alpha_hp", "refined", "iter1", "iter2", "empirical_mean", "ci_low", "ci_high")


@dataclasses.dataclass(frozen=True)
class SweepRow:
    a: float
    b: float
    report: Optional[BoundReport] = None
    stats: Optional[TrialStats] = None
    error: Optional[str] = None  # message of the failure that left some columns empty

    def values(self) -> List[Optional[float]]:
        """Column values in ``SWEEP_HEADER`` order; None where a value is absent"""
        report, stats = self.report, self.stats
        return [
            self.a,
            self.b,
            report.necessary if report else None,
            report.alpha_hp.alpha if report else None,
            report.refined if report else None,
            report.iterate(1) if report else None,
            report.iterate(2) if report else None,
            stats.mean_r if stats else None,
            stats.ci95[0] if stats else None,
            stats.ci95[1] if stats else None,
        ]


def sweep(
    a_values: Sequence[float],
    ratio: float,
    n: int,
    decoder: Optional[DecoderSpec],
    trials: int,
    master_seed: int,
    iterations: int = DEFAULT_ITERATIONS,
    workers: int = 1,
) -> List[SweepRow]:
    """
    For each a (in increasing order) set b = a / ratio, evaluate every bound and, unless ``decoder`` is None,
    estimate the decoder's mean recovery error on graphs with n nodes. Point i uses the master seed
    ``derive_seed(master_seed, i)``. A failing point is logged and kept as a row with empty columns.
    """
    if not ratio > 1:
        raise ParameterError(f"ratio must be > 1, got {ratio}")
    if not a_values or min(a_values) <= 0:
        raise ParameterError("a_values must be a non-empty list of positive numbers")

    rows = []
    for index, a in enumerate(sorted(float(value) for value in a_values)):
        b = a / ratio
        report, stats = None, None
        try:
            report = compute_bound_report(a, b, iterations)
            if decoder is not None:
                plan = TrialPlan(
                    params=SbmParams(a=a, b=b, n=n),
                    decoder=decoder,
                    trials=trials,
                    master_seed=derive_seed(master_seed, index),
                )
                stats = run_trials(plan, workers)
        except Exception as e:
            logger.warning(f"Sweep point a={a}, b={b} failed: {e}")
            rows.append(SweepRow(a=a, b=b, report=report, stats=stats, error=str(e)))
            continue
        logger.info(f"Sweep point a={a:g}, b={b:g} done")
        rows.append(SweepRow(a=a, b=b, report=report, stats=stats))
    return rows


def _format_cell(value: Optional[float]) -> str:
    return "" if value is None else repr(float(value))


def write_sweep_csv(rows: Sequence[SweepRow], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(SWEEP_HEADER)
    for row in rows:
        writer.writerow([_format_cell(value) for value in row.values()])
