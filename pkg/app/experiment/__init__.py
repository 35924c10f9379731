"""
Experiment harness: seeded sweeps, CSV output, trend checks and the CLI.
"""

from .acceptance import CriterionResult, all_passed, check_trends
from .seeding import derive_seed, strategy_key
from .sweep import (
    RunSpec,
    SweepResult,
    execute_runs,
    plan_runs,
    run_single,
    run_sweep,
    summary_path,
    write_records_csv,
    write_summary_csv,
)

__all__ = [
    "CriterionResult",
    "RunSpec",
    "SweepResult",
    "all_passed",
    "check_trends",
    "derive_seed",
    "execute_runs",
    "plan_runs",
    "run_single",
    "run_sweep",
    "strategy_key",
    "summary_path",
    "write_records_csv",
    "write_summary_csv",
]
