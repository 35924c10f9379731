"""
Policy interface shared by every energy / departure strategy.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from enum import Enum
from typing import TYPE_CHECKING, ClassVar

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.models.battery import FULL_CHARGE, Battery, EnergyLevel, RoundOutcome

if TYPE_CHECKING:
    from app.models.robot import Robot


class Strategy(str, Enum):
    """Strategies selectable from config and CLI."""
    NAIVE = "naive"
    ADAPTIVE_WELL = "adaptive-well"
    ADAPTIVE_ILL = "adaptive-ill"
    ADAPTIVE_NULL = "adaptive-null"
    LABELLA = "labella"
    LIU = "liu"
    LABELLA_NULL = "labella+null"
    LIU_NULL = "liu+null"


class EEEVariant(str, Enum):
    """Endgame behaviour once the thresholds cover the whole battery."""
    WELL = "well"
    ILL = "ill"
    NULL = "null"


class StopRule(str, Enum):
    """Strategy-specific endgame stopping criterion checked by the world."""
    NONE = "none"
    NO_ROBOT_FORAGING = "no_robot_foraging"
    EACH_ROBOT_PARKED = "each_robot_parked"


class ChargeDirective(BaseModel):
    """What the nest does with a robot once its nest delay has expired."""

    model_config = ConfigDict(frozen=True)

    battery: Battery = Field(..., description="Post-adaptation battery, level already at target")
    target_level: EnergyLevel
    extra_nest_delay: int = Field(default=0, ge=0)
    park: bool = False

    @model_validator(mode="after")
    def _park_full(self) -> "ChargeDirective":
        if self.park and self.target_level != FULL_CHARGE:
            raise ValueError("a parked robot is charged to full capacity")
        return self


class EEEState(BaseModel):
    """Endgame bookkeeping; `triggered` latches."""

    triggered: bool = False
    rounds_since_trigger: int = Field(default=0, ge=0)
    current_extra_delay: int = Field(default=0, ge=0)

    def latch(self) -> None:
        self.triggered = True


def full_charge_directive(battery: Battery) -> ChargeDirective:
    """Refill to 100% without touching the thresholds."""
    return ChargeDirective(battery=battery.charged_to(FULL_CHARGE), target_level=FULL_CHARGE)


class EnergyPolicy(ABC):
    """
    Per-robot strategy.

    Each robot owns its own instance, so policy state is never shared
    between robots.
    """

    strategy: Strategy
    stop_rule: StopRule = StopRule.NONE
    battery_targeting: ClassVar[bool] = False

    def initial_battery(self, battery: Battery) -> Battery:
        """Battery a robot starts the run with (default: fully charged)."""
        return battery.charged_to(FULL_CHARGE)

    @abstractmethod
    def on_round_end(self, battery: Battery, outcome: RoundOutcome) -> ChargeDirective:
        """Adapt to the finished round and choose the charge target."""

    def may_depart(self, robot: Robot, rng: np.random.Generator) -> bool:
        """Consulted every tick while a charged robot waits in the nest."""
        return True

    def search_time_limit(self) -> int | None:
        """Ticks of searching after which the robot gives up, if any."""
        return None

    @property
    def in_eee(self) -> bool:
        return False
