"""
Trend checks over a sweep summary.

Absolute efficiency values depend on unpublished geometry, so acceptance is
judged on relative trends of mean eta_prime between strategies.
"""

from collections.abc import Sequence

from pydantic import BaseModel, ConfigDict

from app.metrics.efficiency import SummaryRow
from app.strategies.base import Strategy

ADVANTAGE_FLOOR = 1.5
ADVANTAGE_TARGET = 2.0
ATTENUATION_REFERENCE_SIZE = 8


class CriterionResult(BaseModel):
    """Outcome of one trend criterion; `passed` is None when the sweep lacks the data."""

    model_config = ConfigDict(frozen=True)

    name: str
    passed: bool | None
    detail: str


def _series(summary: Sequence[SummaryRow], strategy: Strategy) -> dict[int, float]:
    return {row.swarm_size: row.eta_prime_mean for row in summary if row.strategy == strategy.value}


def _majority(hits: int, total: int) -> bool:
    return hits * 2 > total


def _ratios(summary: Sequence[SummaryRow], numerator: Strategy, denominator: Strategy) -> dict[int, float]:
    top = _series(summary, numerator)
    bottom = _series(summary, denominator)
    return {
        size: top[size] / bottom[size]
        for size in sorted(top.keys() & bottom.keys())
        if bottom[size] > 0
    }


def battery_conscious_advantage(summary: Sequence[SummaryRow]) -> CriterionResult:
    name = "battery-conscious advantage"
    ratios = _ratios(summary, Strategy.ADAPTIVE_NULL, Strategy.NAIVE)
    if not ratios:
        return CriterionResult(name=name, passed=None, detail="needs adaptive-null and naive")
    floor_ok = all(ratio >= ADVANTAGE_FLOOR for ratio in ratios.values())
    doubled = sum(ratio >= ADVANTAGE_TARGET for ratio in ratios.values())
    listing = ", ".join(f"K={size}: {ratio:.2f}x" for size, ratio in ratios.items())
    return CriterionResult(
        name=name,
        passed=floor_ok and _majority(doubled, len(ratios)),
        detail=f"adaptive-null / naive eta_prime: {listing}",
    )


def eee_ranking(summary: Sequence[SummaryRow]) -> CriterionResult:
    name = "EEE ranking"
    null = _series(summary, Strategy.ADAPTIVE_NULL)
    well = _series(summary, Strategy.ADAPTIVE_WELL)
    ill = _series(summary, Strategy.ADAPTIVE_ILL)
    sizes = sorted(null.keys() & well.keys() & ill.keys())
    if not sizes:
        return CriterionResult(name=name, passed=None, detail="needs all three adaptive variants")
    wins = sum(null[size] >= max(well[size], ill[size]) for size in sizes)
    return CriterionResult(
        name=name,
        passed=_majority(wins, len(sizes)),
        detail=f"null best at {wins}/{len(sizes)} sizes",
    )


def density_attenuation(summary: Sequence[SummaryRow]) -> CriterionResult:
    name = "density attenuation"
    ratios = _ratios(summary, Strategy.ADAPTIVE_NULL, Strategy.NAIVE)
    largest = max(ratios, default=None)
    if ATTENUATION_REFERENCE_SIZE not in ratios or largest is None or largest <= ATTENUATION_REFERENCE_SIZE:
        return CriterionResult(
            name=name,
            passed=None,
            detail=f"needs K={ATTENUATION_REFERENCE_SIZE} and a larger size for adaptive-null and naive",
        )
    reference = ratios[ATTENUATION_REFERENCE_SIZE]
    return CriterionResult(
        name=name,
        passed=ratios[largest] < reference,
        detail=f"ratio K={largest}: {ratios[largest]:.2f}x vs K={ATTENUATION_REFERENCE_SIZE}: {reference:.2f}x",
    )


def composition_advantage(summary: Sequence[SummaryRow]) -> CriterionResult:
    name = "composition advantage"
    pairs = [(Strategy.LABELLA_NULL, Strategy.LABELLA), (Strategy.LIU_NULL, Strategy.LIU)]
    verdicts: list[bool] = []
    details: list[str] = []
    for composite, base in pairs:
        with_null = _series(summary, composite)
        without = _series(summary, base)
        sizes = sorted(with_null.keys() & without.keys())
        if not sizes:
            continue
        wins = sum(with_null[size] >= without[size] for size in sizes)
        verdicts.append(_majority(wins, len(sizes)))
        details.append(f"{composite.value} >= {base.value} at {wins}/{len(sizes)} sizes")
    if not verdicts:
        return CriterionResult(name=name, passed=None, detail="needs a composite and its base strategy")
    return CriterionResult(name=name, passed=all(verdicts), detail="; ".join(details))


def check_trends(summary: Sequence[SummaryRow]) -> list[CriterionResult]:
    """Evaluate every trend criterion; criteria without data come back with passed=None."""
    return [
        battery_conscious_advantage(summary),
        eee_ranking(summary),
        density_attenuation(summary),
        composition_advantage(summary),
    ]


def all_passed(results: Sequence[CriterionResult]) -> bool:
    """True when no evaluated criterion failed."""
    return all(result.passed is not False for result in results)
