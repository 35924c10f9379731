"""
Sweep orchestration: strategies x swarm sizes x replicates, run isolation,
CSV emission and aggregation.
"""

from __future__ import annotations

import csv
import time
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import TextIO

from app.metrics.efficiency import (
    CSV_COLUMNS,
    SUMMARY_COLUMNS,
    RunRecord,
    SummaryRow,
    aggregate,
    build_run_record,
    csv_row,
    summary_row,
)
from app.simulation.world import World
from app.strategies.base import Strategy
from app.strategies.factory import parse_strategy
from app.utils.logfire_config import SweepSpan
from app.utils.logging import get_logger, log_performance
from config.settings import Settings

from .seeding import derive_seed

logger = get_logger("experiment")


@dataclass(frozen=True, slots=True)
class RunSpec:
    strategy: Strategy
    swarm_size: int
    replicate: int
    seed: int


@dataclass(frozen=True)
class SweepResult:
    records: list[RunRecord]
    summary: list[SummaryRow]
    output: Path | None
    summary_output: Path | None


def plan_runs(settings: Settings) -> list[RunSpec]:
    """Every (strategy, K, replicate) triple with its derived seed."""
    experiment = settings.experiment
    return [
        RunSpec(strategy, size, replicate, derive_seed(experiment.seed, strategy, size, replicate))
        for strategy in experiment.strategies
        for size in experiment.effective_sizes
        for replicate in range(experiment.replicates)
    ]


def run_single(
    settings: Settings,
    strategy: str | Strategy,
    swarm_size: int,
    seed: int,
    event_stream: TextIO | None = None,
) -> RunRecord:
    """
    Run one world to termination and fold it into a RunRecord.

    Args:
        settings: Simulator settings
        strategy: Strategy name
        swarm_size: Number of robots
        seed: World seed
        event_stream: Optional sink for the tab-separated event log
    """
    strategy = parse_strategy(strategy)
    world = World.create(settings, strategy, swarm_size, seed)
    status = world.run()
    if event_stream is not None:
        world.event_log.write_tsv(event_stream)
    record = build_run_record(
        world.event_log,
        strategy=strategy.value,
        swarm_size=swarm_size,
        seed=seed,
        total_ticks=world.tick,
        reason=status.reason,
    )
    logger.info(
        f"Run {world.run_id} finished: {status.reason.value} after {world.tick} ticks, "
        f"r={record.resources_collected}",
        extra={"run_id": world.run_id},
    )
    return record


def _execute(job: tuple[Settings, RunSpec]) -> RunRecord:
    settings, spec = job
    return run_single(settings, spec.strategy, spec.swarm_size, spec.seed)


def execute_runs(settings: Settings, specs: Sequence[RunSpec]) -> list[RunRecord]:
    """Run every planned run, in parallel when more than one worker is configured; results keep plan order."""
    jobs = [(settings, spec) for spec in specs]
    workers = settings.experiment.workers
    if workers <= 1 or len(jobs) <= 1:
        return [_execute(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_execute, jobs, chunksize=max(1, len(jobs) // (workers * 4))))


def write_records_csv(records: Iterable[RunRecord], stream: TextIO, header: bool = True) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    if header:
        writer.writerow(CSV_COLUMNS)
    for record in records:
        writer.writerow(csv_row(record))


def write_summary_csv(rows: Iterable[SummaryRow], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(SUMMARY_COLUMNS)
    for row in rows:
        writer.writerow(summary_row(row))


def summary_path(output: Path) -> Path:
    return output.with_name(f"{output.stem}_summary{output.suffix or '.csv'}")


def run_sweep(settings: Settings, output: str | Path | None = None) -> SweepResult:
    """
    Run the configured sweep and write `<output>` plus `<output>_summary`.

    Identical settings and master seed produce byte-identical files.

    Args:
        settings: Simulator settings
        output: CSV path; defaults to `experiment.output`, None skips writing
            when `experiment.output` is empty

    Raises:
        OSError: If the output cannot be written
    """
    specs = plan_runs(settings)
    experiment = settings.experiment
    started = time.perf_counter()

    logger.info(
        f"Sweep: {len(experiment.strategies)} strategies x {len(experiment.effective_sizes)} sizes "
        f"x {experiment.replicates} replicates = {len(specs)} runs"
    )
    with SweepSpan(len(specs), [s.value for s in experiment.strategies], experiment.effective_sizes):
        records = execute_runs(settings, specs)
    summary = aggregate(records)

    target = Path(output) if output is not None else (Path(experiment.output) if experiment.output else None)
    summary_target = None
    if target is not None:
        target.parent.mkdir(parents=True, exist_ok=True)
        with target.open("w", encoding="utf-8", newline="") as stream:
            write_records_csv(records, stream)
        summary_target = summary_path(target)
        with summary_target.open("w", encoding="utf-8", newline="") as stream:
            write_summary_csv(summary, stream)

    log_performance("sweep", time.perf_counter() - started, details={"runs": len(specs)})
    return SweepResult(records, summary, target, summary_target)
