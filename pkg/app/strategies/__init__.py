"""
Energy and departure strategies.
"""

from .adaptive import AdaptiveBatteryPolicy, adaptive_on_round_end
from .base import (
    ChargeDirective,
    EEEState,
    EEEVariant,
    EnergyPolicy,
    StopRule,
    Strategy,
)
from .baselines import (
    LabellaPolicy,
    LabellaState,
    LiuPolicy,
    LiuState,
    NaivePolicy,
    labella_update,
    liu_update,
    naive_on_round_end,
)
from .composite import CompositePolicy, compose
from .factory import build_policy, parse_strategy, valid_strategy_names

__all__ = [
    "AdaptiveBatteryPolicy",
    "ChargeDirective",
    "CompositePolicy",
    "EEEState",
    "EEEVariant",
    "EnergyPolicy",
    "LabellaPolicy",
    "LabellaState",
    "LiuPolicy",
    "LiuState",
    "NaivePolicy",
    "StopRule",
    "Strategy",
    "adaptive_on_round_end",
    "build_policy",
    "compose",
    "labella_update",
    "liu_update",
    "naive_on_round_end",
    "parse_strategy",
    "valid_strategy_names",
]
