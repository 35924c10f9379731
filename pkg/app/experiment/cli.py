"""
Command line interface: `run`, `sweep`, `validate` and `check`.

CSV goes to stdout, everything human-readable goes to stderr.
Exit codes: 0 success, 1 usage error, 2 config error, 3 runtime fault,
4 failed trend check.
"""

import csv
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Optional

import click
import typer
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from app.errors import ConfigError, SimulationFault
from app.metrics.efficiency import CSV_COLUMNS, SummaryRow, csv_row
from app.strategies.factory import parse_strategy, valid_strategy_names
from app.utils.logfire_config import setup_logfire
from app.utils.logging import log_error, setup_logging
from config.loader import DEFAULT_CONFIG, load_settings
from config.settings import Settings

from .acceptance import CriterionResult, all_passed, check_trends
from .sweep import plan_runs, run_single, run_sweep

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CONFIG = 2
EXIT_RUNTIME = 3
EXIT_CHECK_FAILED = 4

console = Console(stderr=True)

app = typer.Typer(
    name="swarm-forage",
    help="Swarm foraging simulator with adaptive battery thresholds.",
    add_completion=False,
    no_args_is_help=True,
)

ConfigOption = typer.Option(DEFAULT_CONFIG, "--config", "-c", help="Config file, or 'default'")


def _load(config: str) -> Settings:
    settings = load_settings(config)
    observability = settings.observability
    setup_logging(observability.log_level, observability.log_format, observability.log_file)
    setup_logfire(observability)
    return settings


def _with_experiment(settings: Settings, **changes: object) -> Settings:
    updates = {key: value for key, value in changes.items() if value is not None}
    if not updates:
        return settings
    return settings.model_copy(update={"experiment": settings.experiment.model_copy(update=updates)})


def _summary_table(summary: Sequence[SummaryRow]) -> Table:
    table = Table(title="Efficiency by strategy and swarm size")
    for column in ("strategy", "K", "n", "eta mean", "eta std", "eta' mean", "eta' std"):
        table.add_column(column, justify="left" if column == "strategy" else "right")
    for row in summary:
        table.add_row(
            row.strategy,
            str(row.swarm_size),
            str(row.count),
            f"{row.eta_mean:.5f}",
            f"{row.eta_std:.5f}",
            f"{row.eta_prime_mean:.4f}",
            f"{row.eta_prime_std:.4f}",
        )
    return table


def _criteria_table(results: Sequence[CriterionResult]) -> Table:
    table = Table(title="Trend criteria")
    table.add_column("criterion")
    table.add_column("result")
    table.add_column("detail")
    labels = {True: "[green]pass[/green]", False: "[red]fail[/red]", None: "[yellow]skipped[/yellow]"}
    for result in results:
        table.add_row(result.name, labels[result.passed], escape(result.detail))
    return table


@app.command()
def run(
    strategy: str = typer.Option(..., "--strategy", "-s", help="Strategy name"),
    swarm_size: int = typer.Option(..., "--swarm-size", "-k", min=1, help="Number of robots"),
    seed: int = typer.Option(0, "--seed", min=0, help="World seed"),
    config: str = ConfigOption,
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Also write header and row to this CSV"),
    log_events: Optional[Path] = typer.Option(None, "--log-events", help="Write the event log as TSV"),
) -> None:
    """Run one simulation and print its CSV row."""
    chosen = parse_strategy(strategy)
    settings = _load(config)

    if log_events is not None:
        log_events.parent.mkdir(parents=True, exist_ok=True)
        with log_events.open("w", encoding="utf-8", newline="") as stream:
            record = run_single(settings, chosen, swarm_size, seed, event_stream=stream)
    else:
        record = run_single(settings, chosen, swarm_size, seed)

    row = csv_row(record)
    csv.writer(sys.stdout, lineterminator="\n").writerow(row)
    if out is not None:
        out.parent.mkdir(parents=True, exist_ok=True)
        with out.open("w", encoding="utf-8", newline="") as stream:
            writer = csv.writer(stream, lineterminator="\n")
            writer.writerow(CSV_COLUMNS)
            writer.writerow(row)


@app.command()
def sweep(
    config: str = ConfigOption,
    out: Optional[Path] = typer.Option(
        None, "--out", "-o", help="Per-run CSV path (default: experiment.output); aggregates go to <out>_summary.csv"
    ),
    desk_scale: Optional[bool] = typer.Option(None, "--desk-scale/--full-scale", help="Cap swarm sizes at 64"),
    workers: Optional[int] = typer.Option(None, "--workers", "-w", min=1, help="Worker processes"),
) -> None:
    """
    Run the configured strategies x sizes x replicates sweep.

    Writes one row per run to the output CSV and the mean / std of eta and
    eta' per (strategy, size) to <out>_summary.csv beside it.
    """
    settings = _with_experiment(_load(config), desk_scale=desk_scale, workers=workers)
    result = run_sweep(settings, out)
    console.print(_summary_table(result.summary))
    if result.output is not None:
        console.print(f"Wrote {len(result.records)} runs to {result.output} and {result.summary_output}")


@app.command()
def validate(config: str = ConfigOption) -> None:
    """Check a config file without running anything."""
    settings = _load(config)
    experiment = settings.experiment
    console.print(
        f"[green]Configuration OK[/green]: {len(experiment.strategies)} strategies, "
        f"sizes {experiment.effective_sizes}, {experiment.replicates} replicates, "
        f"{len(plan_runs(settings))} runs"
    )


@app.command()
def check(
    config: str = ConfigOption,
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="CSV path (default: experiment.output)"),
) -> None:
    """Run a sweep and evaluate the efficiency trend criteria."""
    settings = _load(config)
    result = run_sweep(settings, out)
    results = check_trends(result.summary)
    console.print(_summary_table(result.summary))
    console.print(_criteria_table(results))
    if not all_passed(results):
        raise typer.Exit(code=EXIT_CHECK_FAILED)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point; returns the process exit code instead of exiting."""
    args = list(argv) if argv is not None else sys.argv[1:]
    try:
        result = app(args=args, prog_name="swarm-forage", standalone_mode=False)
    except ConfigError as exc:
        console.print(f"[red]Configuration error:[/red] {escape(str(exc))}")
        if exc.field == "strategy":
            console.print(f"Valid strategies: {', '.join(valid_strategy_names())}")
        return EXIT_CONFIG
    except (SimulationFault, OSError) as exc:
        log_error(exc, {"argv": args})
        console.print(f"[red]Runtime fault:[/red] {escape(str(exc))}")
        return EXIT_RUNTIME
    except click.exceptions.Abort:
        return EXIT_USAGE
    except click.ClickException as exc:
        exc.show()
        return EXIT_USAGE
    return result if isinstance(result, int) else EXIT_OK
