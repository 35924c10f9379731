"""
Baseline strategies: naive full charging, Labella departure probability
and the self-tracking variant of Liu's adaptive search time.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.models.battery import Battery, RoundOutcome

from .base import ChargeDirective, EnergyPolicy, Strategy, full_charge_directive

if TYPE_CHECKING:
    from app.models.robot import Robot


def naive_on_round_end(battery: Battery, outcome: RoundOutcome) -> ChargeDirective:
    """Always refill to 100%; the thresholds never move."""
    return full_charge_directive(battery)


class NaivePolicy(EnergyPolicy):
    """Forages without any energy-efficiency strategy."""

    strategy = Strategy.NAIVE

    def on_round_end(self, battery: Battery, outcome: RoundOutcome) -> ChargeDirective:
        return naive_on_round_end(battery, outcome)


class LabellaState(BaseModel):
    """Probability of leaving the nest on a given tick."""

    model_config = ConfigDict(frozen=True)

    p: float = Field(default=0.033, allow_inf_nan=False)
    p_min: float = Field(default=0.0015, ge=0.0, le=1.0)
    p_max: float = Field(default=0.05, ge=0.0, le=1.0)
    delta: float = Field(default=0.005, ge=0.0, allow_inf_nan=False)

    @model_validator(mode="after")
    def _in_bounds(self) -> "LabellaState":
        if not self.p_min <= self.p <= self.p_max:
            raise ValueError(f"P={self.p} outside [{self.p_min}, {self.p_max}]")
        return self


def labella_update(state: LabellaState, success: bool) -> LabellaState:
    """Move P by +delta on success, -delta on failure, clamped."""
    step = state.delta if success else -state.delta
    p = min(state.p_max, max(state.p_min, state.p + step))
    return state.model_copy(update={"p": p})


class LabellaPolicy(EnergyPolicy):
    """Charges to full; leaves the nest with an adaptive per-tick probability."""

    strategy = Strategy.LABELLA

    def __init__(self, state: LabellaState) -> None:
        self.state = state

    def on_round_end(self, battery: Battery, outcome: RoundOutcome) -> ChargeDirective:
        self.state = labella_update(self.state, outcome.success)
        return full_charge_directive(battery)

    def may_depart(self, robot: Robot, rng: np.random.Generator) -> bool:
        return bool(rng.random() < self.state.p)


class LiuState(BaseModel):
    """Search-time budget in ticks."""

    model_config = ConfigDict(frozen=True)

    search_time_budget: int = Field(default=200, gt=0)
    step_up: int = Field(default=20, ge=0)
    step_down: int = Field(default=10, ge=0)
    t_min: int = Field(default=50, gt=0)
    t_max: int = Field(default=1000, gt=0)

    @model_validator(mode="after")
    def _in_bounds(self) -> "LiuState":
        if not self.t_min <= self.search_time_budget <= self.t_max:
            raise ValueError(
                f"budget {self.search_time_budget} outside [{self.t_min}, {self.t_max}]"
            )
        return self


def liu_update(state: LiuState, success: bool) -> LiuState:
    """Search longer after a failure, shorter after a success."""
    budget = state.search_time_budget - state.step_down if success else state.search_time_budget + state.step_up
    budget = min(state.t_max, max(state.t_min, budget))
    return state.model_copy(update={"search_time_budget": budget})


class LiuPolicy(EnergyPolicy):
    """Charges to full; gives up searching once its own time budget is spent."""

    strategy = Strategy.LIU

    def __init__(self, state: LiuState) -> None:
        self.state = state

    def on_round_end(self, battery: Battery, outcome: RoundOutcome) -> ChargeDirective:
        self.state = liu_update(self.state, outcome.success)
        return full_charge_directive(battery)

    def search_time_limit(self) -> int | None:
        return self.state.search_time_budget
