"""
Swarm efficiency metrics and sweep aggregation.

eta = r / t counts resources per tick; eta_prime = r / sum_k(E_d + E_b)
charges the swarm for both the energy it burned and the charge it left
unused in the batteries.
"""

from collections import defaultdict
from collections.abc import Iterable, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from app.errors import UndefinedMetricError
from app.models.record import EventKind, SimulationEvent, TerminationReason

CSV_COLUMNS = [
    "strategy",
    "K",
    "seed",
    "r",
    "ticks",
    "sum_Ed",
    "sum_Eb",
    "eta",
    "eta_prime",
    "termination_reason",
]

SUMMARY_COLUMNS = [
    "strategy",
    "K",
    "count",
    "eta_mean",
    "eta_std",
    "eta_prime_mean",
    "eta_prime_std",
]


class RunRecord(BaseModel):
    """Metrics of one finished run."""

    model_config = ConfigDict(frozen=True)

    strategy: str
    swarm_size: int = Field(..., gt=0)
    seed: int
    resources_collected: int = Field(..., ge=0)
    total_ticks: int = Field(..., ge=0)
    depleted: list[float] = Field(..., description="E_d per robot")
    residual: list[float] = Field(..., description="E_b per robot")
    termination_reason: TerminationReason
    successful_round_energy: float = Field(default=0.0, ge=0.0)
    mean_return_residual: float | None = None

    @field_validator("depleted")
    @classmethod
    def _non_negative(cls, v: list[float]) -> list[float]:
        if any(value < 0 for value in v):
            raise ValueError("depleted energy cannot be negative")
        return v

    @field_validator("residual")
    @classmethod
    def _in_battery(cls, v: list[float]) -> list[float]:
        if any(not 0.0 <= value <= 1.0 for value in v):
            raise ValueError("residual energy must lie in [0, 1]")
        return v

    @property
    def sum_depleted(self) -> float:
        return float(sum(self.depleted))

    @property
    def sum_residual(self) -> float:
        return float(sum(self.residual))


class SummaryRow(BaseModel):
    """Mean and sample standard deviation per (strategy, K)."""

    model_config = ConfigDict(frozen=True)

    strategy: str
    swarm_size: int
    count: int
    eta_mean: float
    eta_std: float
    eta_prime_mean: float
    eta_prime_std: float


def eta(record: RunRecord) -> float:
    """
    Resources per tick.

    Raises:
        UndefinedMetricError: If the run lasted zero ticks
    """
    if record.total_ticks <= 0:
        raise UndefinedMetricError("eta is undefined for a run of zero ticks")
    return record.resources_collected / record.total_ticks


def eta_prime(record: RunRecord) -> float:
    """
    Resources per unit of total energy footprint (spent plus left in batteries).

    Raises:
        UndefinedMetricError: If the energy footprint is zero
    """
    footprint = record.sum_depleted + record.sum_residual
    if footprint <= 0.0:
        raise UndefinedMetricError("eta_prime is undefined for a zero energy footprint")
    return record.resources_collected / footprint


def swarm_objective(record: RunRecord) -> float:
    """Sum of the (negative) energy deltas of all successful rounds."""
    return -record.successful_round_energy


def mean_return_residual(record: RunRecord) -> float | None:
    """Mean battery level at nest arrival, None when no round completed."""
    return record.mean_return_residual


def build_run_record(
    events: Iterable[SimulationEvent],
    *,
    strategy: str,
    swarm_size: int,
    seed: int,
    total_ticks: int,
    reason: TerminationReason,
) -> RunRecord:
    """
    Fold a run's event log into its RunRecord.

    E_d of a robot is every completed round, the round it died in and the
    round in flight at termination; E_b is its final level (0 when dead).
    """
    depleted = [0.0] * swarm_size
    residual = [0.0] * swarm_size
    delivered = 0
    successful = 0.0
    return_levels: list[float] = []

    for event in events:
        payload = event.payload
        if event.kind is EventKind.DEPOSIT:
            delivered += 1
        elif event.kind is EventKind.ARRIVE:
            spent = float(payload["energy_spent"])
            depleted[event.robot] += spent
            return_levels.append(float(payload["level"]))
            if payload["success"]:
                successful += spent
        elif event.kind is EventKind.DEATH:
            depleted[event.robot] += float(payload["energy_spent"])
        elif event.kind is EventKind.FINAL:
            depleted[event.robot] += float(payload["in_flight_spent"])
            residual[event.robot] = float(payload["level"])

    return RunRecord(
        strategy=strategy,
        swarm_size=swarm_size,
        seed=seed,
        resources_collected=delivered,
        total_ticks=total_ticks,
        depleted=depleted,
        residual=residual,
        termination_reason=reason,
        successful_round_energy=successful,
        mean_return_residual=float(np.mean(return_levels)) if return_levels else None,
    )


def csv_row(record: RunRecord) -> list[str]:
    """Row in CSV_COLUMNS order."""
    try:
        eta_value = repr(eta(record))
    except UndefinedMetricError:
        eta_value = "nan"
    try:
        eta_prime_value = repr(eta_prime(record))
    except UndefinedMetricError:
        eta_prime_value = "nan"
    return [
        record.strategy,
        str(record.swarm_size),
        str(record.seed),
        str(record.resources_collected),
        str(record.total_ticks),
        repr(record.sum_depleted),
        repr(record.sum_residual),
        eta_value,
        eta_prime_value,
        record.termination_reason.value,
    ]


def _mean_std(values: Sequence[float]) -> tuple[float, float]:
    array = np.asarray(values, dtype=float)
    std = float(np.std(array, ddof=1)) if len(array) > 1 else 0.0
    return float(np.mean(array)), std


def aggregate(records: Sequence[RunRecord]) -> list[SummaryRow]:
    """
    Group records by (strategy, K) and summarise eta and eta_prime.

    Raises:
        UndefinedMetricError: If there are no records
    """
    if not records:
        raise UndefinedMetricError("cannot aggregate an empty group of runs")

    groups: dict[tuple[str, int], list[RunRecord]] = defaultdict(list)
    for record in records:
        groups[(record.strategy, record.swarm_size)].append(record)

    rows = []
    for (strategy, swarm_size), group in sorted(groups.items()):
        eta_mean, eta_std = _mean_std([eta(record) for record in group])
        eta_prime_mean, eta_prime_std = _mean_std([eta_prime(record) for record in group])
        rows.append(
            SummaryRow(
                strategy=strategy,
                swarm_size=swarm_size,
                count=len(group),
                eta_mean=eta_mean,
                eta_std=eta_std,
                eta_prime_mean=eta_prime_mean,
                eta_prime_std=eta_prime_std,
            )
        )
    return rows


def summary_row(row: SummaryRow) -> list[str]:
    """Row in SUMMARY_COLUMNS order."""
    return [
        row.strategy,
        str(row.swarm_size),
        str(row.count),
        repr(row.eta_mean),
        repr(row.eta_std),
        repr(row.eta_prime_mean),
        repr(row.eta_prime_std),
    ]
