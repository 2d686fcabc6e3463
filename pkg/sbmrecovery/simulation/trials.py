"""Seeded Monte Carlo estimation of the expected recovery error of a decoder"""

import csv
import dataclasses
import math
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, Tuple

import numpy as np
import pydantic.v1 as pydantic
from scipy.stats import binom

from sbmrecovery.decoders.bisection import DEFAULT_RESTARTS
from sbmrecovery.decoders.registry import decoder_names, make_decoder
from sbmrecovery.model.generator import generate
from sbmrecovery.model.labels import recovery_error
from sbmrecovery.model.params import SbmParams
from sbmrecovery.utils.exceptions import BudgetError, ParameterError, TrialError
from sbmrecovery.utils.logging import configure_subprocess_logging, get_logger, setup_mp_logging, shutdown_mp_logging
from sbmrecovery.utils.seeding import derive_seed

logger = get_logger(__name__)

CI_Z = 1.96  # two-sided 95% normal quantile
GRAPH_SEED_STREAM = 0
DECODER_SEED_STREAM = 1


@pydantic.dataclasses.dataclass
class DecoderSpec:
    name: str = "two-step"
    restarts: pydantic.conint(ge=1) = DEFAULT_RESTARTS  # type: ignore
    use_threshold_rule: bool = False

    @pydantic.validator("name")
    def _known_decoder(cls, name):
        if name not in decoder_names():
            raise ValueError(f"unknown decoder {name!r}; choose one of {', '.join(decoder_names())}")
        return name


@pydantic.dataclasses.dataclass
class TrialPlan:
    params: SbmParams
    decoder: DecoderSpec
    trials: pydantic.conint(ge=1)  # type: ignore
    master_seed: pydantic.conint(ge=0)  # type: ignore


@dataclasses.dataclass(frozen=True)
class TrialResult:
    trial: int
    seed: int  # per-trial seed derived from the master seed and the trial index
    r: float


@dataclasses.dataclass(frozen=True)
class TrialStats:
    mean_r: float
    std_r: float  # sample standard deviation (0 for a single trial)
    stderr: float
    ci95: Tuple[float, float]  # normal approximation
    trials: int
    runtime_ms: int

    def to_dict(self) -> Dict[str, Any]:
        result = dataclasses.asdict(self)
        result["ci95"] = list(self.ci95)
        return result


def trial_seed(master_seed: int, trial: int) -> int:
    return derive_seed(master_seed, trial)


def run_single_trial(
    a: float,
    b: float,
    n: int,
    decoder_name: str,
    restarts: int,
    use_threshold_rule: bool,
    master_seed: int,
    trial: int,
) -> TrialResult:
    """Generate one graph, decode it and score the estimate; takes plain values so it can run in a worker process"""
    seed = trial_seed(master_seed, trial)
    try:
        params = SbmParams(a=a, b=b, n=n)
        decoder = make_decoder(decoder_name, restarts=restarts, use_threshold_rule=use_threshold_rule)
        labels, graph = generate(params, derive_seed(seed, GRAPH_SEED_STREAM))
        estimate = decoder.decode(graph, params, derive_seed(seed, DECODER_SEED_STREAM), reference=labels)
        r = recovery_error(labels, estimate).r
    except Exception as e:
        raise TrialError(trial, seed, e) from e
    logger.debug(f"Trial {trial} (seed {seed}): r = {r:.6f}")
    return TrialResult(trial=trial, seed=seed, r=r)


def _run_single_trial_packed(args: Tuple) -> TrialResult:
    return run_single_trial(*args)


def run_trial_results(plan: TrialPlan, workers: int = 1) -> List[TrialResult]:
    """
    Run every trial of ``plan``. Per-trial seeds depend only on the master seed and the trial index, so the results
    are identical for any number of ``workers``.
    """
    if workers < 1:
        raise ParameterError(f"workers must be >= 1, got {workers}")
    params, spec = plan.params, plan.decoder
    try:
        make_decoder(spec.name, spec.restarts, spec.use_threshold_rule).check_budget(params.n)
    except BudgetError as e:
        # reported against the first trial
        raise TrialError(0, trial_seed(plan.master_seed, 0), e) from e

    tasks = [
        (params.a, params.b, params.n, spec.name, spec.restarts, spec.use_threshold_rule, plan.master_seed, trial)
        for trial in range(plan.trials)
    ]
    if workers == 1 or plan.trials == 1:
        return [run_single_trial(*task) for task in tasks]

    log_queue = setup_mp_logging()
    try:
        with ProcessPoolExecutor(
            max_workers=workers, initializer=configure_subprocess_logging, initargs=(log_queue,)
        ) as executor:
            chunksize = max(1, len(tasks) // (4 * workers))
            results = list(executor.map(_run_single_trial_packed, tasks, chunksize=chunksize))
    finally:
        shutdown_mp_logging()
    return sorted(results, key=lambda result: result.trial)


def summarize(results: List[TrialResult], runtime_ms: int = 0) -> TrialStats:
    if not results:
        raise ParameterError("Cannot summarize zero trials")
    rs = np.array([result.r for result in results], dtype=np.float64)
    trials = rs.size
    mean_r = float(rs.mean())
    std_r = float(rs.std(ddof=1)) if trials > 1 else 0.0
    stderr = std_r / math.sqrt(trials)
    ci95 = (mean_r - CI_Z * stderr, mean_r + CI_Z * stderr)
    return TrialStats(mean_r=mean_r, std_r=std_r, stderr=stderr, ci95=ci95, trials=trials, runtime_ms=runtime_ms)


def run_trials(plan: TrialPlan, workers: int = 1) -> TrialStats:
    """Estimate the expected recovery error of the planned decoder with a normal-approximation 95% interval"""
    return run_trials_with_results(plan, workers)[0]


def run_trials_with_results(plan: TrialPlan, workers: int = 1) -> Tuple[TrialStats, List[TrialResult]]:
    start = time.perf_counter()
    results = run_trial_results(plan, workers)
    runtime_ms = int(round((time.perf_counter() - start) * 1000))
    stats = summarize(results, runtime_ms)
    logger.info(
        f"{plan.decoder.name} on a={plan.params.a}, b={plan.params.b}, n={plan.params.n}: "
        f"mean r = {stats.mean_r:.4f} +- {stats.stderr:.4f} over {stats.trials} trials in {runtime_ms} ms"
    )
    return stats, results


def random_guess_expected_error(n: int) -> float:
    """Exact E[min(B, n - B) / n] for B ~ Binomial(n, 1/2): the mean error of labeling every node by a fair coin"""
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    mismatches = np.arange(n + 1)
    return float(np.dot(binom.pmf(mismatches, n, 0.5), np.minimum(mismatches, n - mismatches)) / n)


TRIAL_DUMP_HEADER = ("trial", "seed", "r")


def write_trial_dump(path: str, results: List[TrialResult]) -> None:
    """Per-trial audit table: one ``trial,seed,r`` row per trial"""
    with open(path, "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(TRIAL_DUMP_HEADER)
        for result in results:
            writer.writerow((result.trial, result.seed, repr(result.r)))
