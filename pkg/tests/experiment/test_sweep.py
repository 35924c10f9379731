"""
Varredura: planejamento, isolamento de execuções e saída CSV determinística.
"""

import csv

import pytest

from app.experiment import plan_runs, run_single, run_sweep, summary_path
from app.experiment.seeding import derive_seed
from app.metrics.efficiency import CSV_COLUMNS, SUMMARY_COLUMNS
from app.models.record import TerminationReason
from app.strategies.base import Strategy


def seeds_by_run(specs):
    return {(spec.strategy, spec.swarm_size, spec.replicate): spec.seed for spec in specs}


class TestPlan:
    def test_cardinality_and_seeds(self, small_settings):
        specs = plan_runs(small_settings)
        assert len(specs) == 2 * 2 * 3
        spec = specs[0]
        assert spec.seed == derive_seed(42, spec.strategy, spec.swarm_size, spec.replicate)

    def test_order_independent_seeds(self, small_settings):
        reordered = small_settings.model_copy(
            update={
                "experiment": small_settings.experiment.model_copy(
                    update={"strategies": [Strategy.ADAPTIVE_NULL, Strategy.NAIVE]}
                )
            }
        )
        assert seeds_by_run(plan_runs(small_settings)) == seeds_by_run(plan_runs(reordered))

    def test_full_default_sweep(self, settings):
        assert len(plan_runs(settings)) == 8 * 8 * 20

    def test_desk_scale_caps_sizes(self, settings):
        desk = settings.model_copy(
            update={"experiment": settings.experiment.model_copy(update={"desk_scale": True})}
        )
        assert max(spec.swarm_size for spec in plan_runs(desk)) == 64


class TestRunSingle:
    def test_record_fields(self, small_settings):
        record = run_single(small_settings, "adaptive-null", 3, seed=7)
        assert record.strategy == "adaptive-null"
        assert record.swarm_size == 3
        assert len(record.depleted) == 3
        assert record.termination_reason in set(TerminationReason)

    def test_isolated_runs_repeat(self, small_settings):
        first = run_single(small_settings, "naive", 2, seed=5)
        run_single(small_settings, "adaptive-null", 3, seed=6)
        assert run_single(small_settings, "naive", 2, seed=5) == first


class TestRunSweep:
    def test_writes_runs_and_summary(self, small_settings, tmp_path):
        out = tmp_path / "sweep.csv"
        result = run_sweep(small_settings, out)

        with out.open(newline="") as stream:
            rows = list(csv.reader(stream))
        assert rows[0] == CSV_COLUMNS
        assert len(rows) == 1 + 12

        with summary_path(out).open(newline="") as stream:
            summary = list(csv.reader(stream))
        assert summary[0] == SUMMARY_COLUMNS
        assert len(summary) == 1 + 4
        assert [row.count for row in result.summary] == [3, 3, 3, 3]

    def test_byte_identical_reruns(self, small_settings, tmp_path):
        first = tmp_path / "a.csv"
        second = tmp_path / "b.csv"
        run_sweep(small_settings, first)
        run_sweep(small_settings, second)
        assert first.read_bytes() == second.read_bytes()
        assert summary_path(first).read_bytes() == summary_path(second).read_bytes()

    def test_parallel_matches_sequential(self, small_settings, tmp_path):
        parallel = small_settings.model_copy(
            update={"experiment": small_settings.experiment.model_copy(update={"workers": 2})}
        )
        run_sweep(small_settings, tmp_path / "seq.csv")
        run_sweep(parallel, tmp_path / "par.csv")
        assert (tmp_path / "seq.csv").read_bytes() == (tmp_path / "par.csv").read_bytes()

    def test_no_output_configured(self, small_settings):
        result = run_sweep(small_settings)
        assert result.output is None
        assert len(result.records) == 12

    @pytest.mark.slow
    def test_two_strategies_twenty_replicates(self, small_settings, tmp_path):
        settings = small_settings.model_copy(
            update={
                "experiment": small_settings.experiment.model_copy(update={"sizes": [8], "replicates": 20})
            }
        )
        result = run_sweep(settings, tmp_path / "forty.csv")
        assert len(result.records) == 40
        assert len(result.summary) == 2
