"""
Battery adaptation equations and the per-robot state machine.
"""

from .energy import (
    adapt_thresholds,
    is_eee,
    reallocate_thresholds,
    round_energy_delta,
    update_capacity,
    update_lower_threshold,
)
from .fsm import FsmParams, TickResult, charge_tick, tick

__all__ = [
    "adapt_thresholds",
    "is_eee",
    "reallocate_thresholds",
    "round_energy_delta",
    "update_capacity",
    "update_lower_threshold",
    "FsmParams",
    "TickResult",
    "charge_tick",
    "tick",
]
