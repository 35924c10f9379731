"""
Adaptive battery allocation with the three endgame variants.
"""

from __future__ import annotations

from typing import ClassVar

from app.core.energy import adapt_thresholds, is_eee, reallocate_thresholds, update_lower_threshold
from app.models.battery import FULL_CHARGE, AdaptationWeights, Battery, RoundOutcome

from .base import ChargeDirective, EEEState, EEEVariant, EnergyPolicy, StopRule, Strategy


def adaptive_on_round_end(
    battery: Battery,
    outcome: RoundOutcome,
    eee: EEEState,
    variant: EEEVariant,
    weights: AdaptationWeights,
    tau: int,
) -> ChargeDirective:
    """
    Adapt thresholds after a round, or apply the endgame once triggered.

    Args:
        battery: Battery before adaptation
        outcome: The finished round
        eee: Endgame state of this robot, updated in place
        variant: Well, Ill or Null informed endgame
        weights: Adaptation weights
        tau: Nest-delay increment per endgame round

    Returns:
        Charge directive for the nest
    """
    if not eee.triggered and is_eee(battery):
        eee.latch()

    if not eee.triggered:
        adapted = adapt_thresholds(battery, outcome, weights)
        return ChargeDirective(battery=adapted.charged_to(adapted.upper), target_level=adapted.upper)

    eee.rounds_since_trigger += 1

    if variant is EEEVariant.NULL:
        return ChargeDirective(battery=battery.charged_to(FULL_CHARGE), target_level=FULL_CHARGE, park=True)

    eee.current_extra_delay += tau
    if variant is EEEVariant.ILL:
        lower = update_lower_threshold(battery, outcome, weights)
        battery = reallocate_thresholds(battery.model_copy(update={"lower": lower}))

    return ChargeDirective(
        battery=battery.charged_to(battery.upper),
        target_level=battery.upper,
        extra_nest_delay=eee.current_extra_delay,
    )


class AdaptiveBatteryPolicy(EnergyPolicy):
    """Charges to the adapted upper threshold instead of to full."""

    battery_targeting: ClassVar[bool] = True

    _strategies: ClassVar[dict[EEEVariant, Strategy]] = {
        EEEVariant.WELL: Strategy.ADAPTIVE_WELL,
        EEEVariant.ILL: Strategy.ADAPTIVE_ILL,
        EEEVariant.NULL: Strategy.ADAPTIVE_NULL,
    }

    def __init__(self, variant: EEEVariant, weights: AdaptationWeights, tau: int) -> None:
        self.variant = variant
        self.weights = weights
        self.tau = tau
        self.eee = EEEState()
        self.strategy = self._strategies[variant]
        self.stop_rule = (
            StopRule.EACH_ROBOT_PARKED if variant is EEEVariant.NULL else StopRule.NO_ROBOT_FORAGING
        )

    def initial_battery(self, battery: Battery) -> Battery:
        return battery.charged_to(battery.upper)

    def on_round_end(self, battery: Battery, outcome: RoundOutcome) -> ChargeDirective:
        return adaptive_on_round_end(battery, outcome, self.eee, self.variant, self.weights, self.tau)

    @property
    def in_eee(self) -> bool:
        return self.eee.triggered
