"""
Robot state used by the per-robot finite state machine.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING

from .battery import Battery, RoundOutcome

if TYPE_CHECKING:
    from app.strategies.base import EnergyPolicy


class RobotState(str, Enum):
    """Behavioural states of a forager."""
    CHARGING = "charging"
    SEARCHING = "searching"
    COLLECTING = "collecting"  # instantaneous, never held across ticks
    RETREATING = "retreating"
    DEAD = "dead"
    INACTIVE = "inactive"


ABSORBING_STATES = frozenset({RobotState.DEAD, RobotState.INACTIVE})
MOBILE_STATES = frozenset({RobotState.SEARCHING, RobotState.RETREATING})


@dataclass(frozen=True, slots=True)
class SensorReport:
    """What a robot perceives at the start of its tick."""
    resource_contact: bool = False
    robot_contacts: int = 0
    in_nest: bool = False
    collection_succeeds: bool = True


@dataclass(slots=True)
class RoundAccumulator:
    """Running totals of the round in progress."""
    success: bool = False
    encounters: int = 0
    t_search: int = 0
    t_retreat: int = 0
    energy_spent: float = 0.0
    departure_level: float = 0.0

    def reset(self) -> None:
        self.success = False
        self.encounters = 0
        self.t_search = 0
        self.t_retreat = 0
        self.energy_spent = 0.0
        self.departure_level = 0.0

    def to_outcome(self) -> RoundOutcome:
        return RoundOutcome(
            success=self.success,
            encounters=self.encounters,
            energy_spent=self.energy_spent,
            t_search=self.t_search,
            t_retreat=self.t_retreat,
        )


@dataclass(slots=True)
class Robot:
    """
    A single forager.

    Robots start in the nest, charged and ready to depart. `policy` holds the
    per-robot strategy state (thresholds memory, departure probability,
    search-time budget...).
    """
    id: int
    x: float
    y: float
    heading: float
    battery: Battery
    policy: EnergyPolicy
    state: RobotState = RobotState.CHARGING
    carrying: bool = False
    round: RoundAccumulator = field(default_factory=RoundAccumulator)
    nest_delay: int = 0
    charged: bool = True
    energy_depleted: float = 0.0
    rounds_completed: int = 0

    @property
    def position(self) -> tuple[float, float]:
        return (self.x, self.y)

    @property
    def is_alive(self) -> bool:
        return self.state is not RobotState.DEAD

    @property
    def is_mobile(self) -> bool:
        return self.state in MOBILE_STATES
