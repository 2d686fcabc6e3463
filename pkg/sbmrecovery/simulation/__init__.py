"""
Seeded Monte Carlo harness: per-decoder error estimates and sweeps that set them against the bounds
"""

from sbmrecovery.simulation.config import SimulationConfig
from sbmrecovery.simulation.sweep import SWEEP_HEADER, SweepRow, sweep, write_sweep_csv
from sbmrecovery.simulation.trials import (
    DecoderSpec,
    TrialPlan,
    TrialResult,
    TrialStats,
    random_guess_expected_error,
    run_single_trial,
    run_trial_results,
    run_trials,
    run_trials_with_results,
    summarize,
    write_trial_dump,
)
