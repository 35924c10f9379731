"""
Efficiency metrics computed from run event logs.
"""

from .efficiency import (
    CSV_COLUMNS,
    SUMMARY_COLUMNS,
    RunRecord,
    SummaryRow,
    aggregate,
    build_run_record,
    csv_row,
    eta,
    eta_prime,
    mean_return_residual,
    summary_row,
    swarm_objective,
)

__all__ = [
    "CSV_COLUMNS",
    "SUMMARY_COLUMNS",
    "RunRecord",
    "SummaryRow",
    "aggregate",
    "build_run_record",
    "csv_row",
    "eta",
    "eta_prime",
    "mean_return_residual",
    "summary_row",
    "swarm_objective",
]
