"""
Combination of a baseline departure / search-time method with adaptive
battery targeting.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, ClassVar

import numpy as np

from app.errors import ConfigError
from app.models.battery import Battery, RoundOutcome

from .base import ChargeDirective, EnergyPolicy, Strategy

if TYPE_CHECKING:
    from app.models.robot import Robot


class CompositePolicy(EnergyPolicy):
    """
    Departure gating and search-time cap come from `base`; charge targets,
    thresholds and the endgame come from `battery_aware`.
    """

    battery_targeting: ClassVar[bool] = True

    def __init__(self, base: EnergyPolicy, battery_aware: EnergyPolicy, strategy: Strategy) -> None:
        if base.battery_targeting:
            raise ConfigError(
                f"{base.strategy.value} already targets the battery and cannot be composed"
            )
        if not battery_aware.battery_targeting:
            raise ConfigError(f"{battery_aware.strategy.value} does not target the battery")
        self.base = base
        self.battery_aware = battery_aware
        self.strategy = strategy
        self.stop_rule = battery_aware.stop_rule

    def initial_battery(self, battery: Battery) -> Battery:
        return self.battery_aware.initial_battery(battery)

    def on_round_end(self, battery: Battery, outcome: RoundOutcome) -> ChargeDirective:
        # The base only updates its own state; its full-charge directive is discarded.
        self.base.on_round_end(battery, outcome)
        return self.battery_aware.on_round_end(battery, outcome)

    def may_depart(self, robot: Robot, rng: np.random.Generator) -> bool:
        return self.base.may_depart(robot, rng)

    def search_time_limit(self) -> int | None:
        return self.base.search_time_limit()

    @property
    def in_eee(self) -> bool:
        return self.battery_aware.in_eee


def compose(base: EnergyPolicy, battery_aware: EnergyPolicy) -> CompositePolicy:
    """Compose a Labella or Liu policy with an adaptive-battery policy."""
    names = {
        (Strategy.LABELLA, Strategy.ADAPTIVE_NULL): Strategy.LABELLA_NULL,
        (Strategy.LIU, Strategy.ADAPTIVE_NULL): Strategy.LIU_NULL,
    }
    if base.battery_targeting and battery_aware.battery_targeting:
        raise ConfigError(
            f"cannot compose two battery-targeting policies "
            f"({base.strategy.value}, {battery_aware.strategy.value})"
        )
    strategy = names.get((base.strategy, battery_aware.strategy))
    if strategy is None:
        raise ConfigError(
            f"no composite strategy for {base.strategy.value} with {battery_aware.strategy.value}"
        )
    return CompositePolicy(base, battery_aware, strategy)
