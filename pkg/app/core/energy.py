"""
Energy dynamics and adaptive threshold updates.

Pure functions over Battery / RoundOutcome values. The update equations
consume the magnitude of energy spent in the round, so the leftover term
max(0, C - spent) is the unused part of the foraging budget.
"""

from app.models.battery import FULL_CHARGE, AdaptationWeights, Battery, EnergyRates, RoundOutcome


def round_energy_delta(rates: EnergyRates, outcome: RoundOutcome) -> float:
    """
    Change of battery level over one round (never positive).

    Args:
        rates: Drain rates and collection cost
        outcome: Round accounting

    Returns:
        -(alpha_s * t_s + p * f(r) + alpha_r * t_r)
    """
    return -(
        rates.alpha_s * outcome.t_search
        + rates.p * outcome.f
        + rates.alpha_r * outcome.t_retreat
    )


def _leftover(battery: Battery, outcome: RoundOutcome) -> float:
    return max(0.0, battery.capacity - outcome.energy_spent)


def update_capacity(battery: Battery, outcome: RoundOutcome, weights: AdaptationWeights) -> float:
    """
    New foraging capacity C' after a round.

    Shrinks when a successful round finished with budget to spare, grows on
    failure and with every robot encounter. Only clamped at zero; the
    combined bound with the lower threshold is applied by
    reallocate_thresholds.
    """
    f = outcome.f
    delta = (
        -f * _leftover(battery, outcome) * weights.w1c
        + (1 - f) * weights.w2c
        + outcome.encounters * weights.w3c
    )
    return max(0.0, battery.capacity + delta)


def update_lower_threshold(
    battery: Battery, outcome: RoundOutcome, weights: AdaptationWeights
) -> float:
    """
    New retreat threshold E^L' after a round, clamped to [0, 1].

    The leftover term is applied whether or not the round succeeded.
    """
    delta = (
        -_leftover(battery, outcome) * weights.w1
        + (1 - outcome.f) * weights.w2
        + outcome.encounters * weights.w3
    )
    return min(FULL_CHARGE, max(0.0, battery.lower + delta))


def reallocate_thresholds(battery: Battery) -> Battery:
    """Recompute the upper threshold as min(1, lower + capacity)."""
    capacity = max(0.0, battery.capacity)
    lower = min(FULL_CHARGE, max(0.0, battery.lower))
    upper = min(FULL_CHARGE, lower + capacity)
    lower = min(lower, upper)
    return battery.model_copy(update={"lower": lower, "capacity": capacity, "upper": upper})


def adapt_thresholds(battery: Battery, outcome: RoundOutcome, weights: AdaptationWeights) -> Battery:
    """Run both updates from the same pre-round battery, then reallocate."""
    capacity = update_capacity(battery, outcome, weights)
    lower = update_lower_threshold(battery, outcome, weights)
    return reallocate_thresholds(battery.model_copy(update={"lower": lower, "capacity": capacity}))


def is_eee(battery: Battery) -> bool:
    """True once the allocation covers the whole battery (lower + C >= 1)."""
    return battery.lower + battery.capacity >= FULL_CHARGE
