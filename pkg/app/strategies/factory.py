"""
Strategy name resolution and per-robot policy construction.
"""

from __future__ import annotations

from collections.abc import Callable
from typing import TYPE_CHECKING

from app.errors import ConfigError

from .adaptive import AdaptiveBatteryPolicy
from .base import EEEVariant, EnergyPolicy, Strategy
from .baselines import LabellaPolicy, LabellaState, LiuPolicy, LiuState, NaivePolicy
from .composite import compose

if TYPE_CHECKING:
    from config.settings import Settings


def valid_strategy_names() -> list[str]:
    return [strategy.value for strategy in Strategy]


def parse_strategy(name: str | Strategy) -> Strategy:
    """
    Resolve a strategy name.

    Raises:
        ConfigError: If the name is unknown; the message lists the valid names
    """
    if isinstance(name, Strategy):
        return name
    try:
        return Strategy(name.strip().lower())
    except ValueError:
        raise ConfigError(
            f"unknown strategy {name!r}; valid strategies: {', '.join(valid_strategy_names())}",
            field="strategy",
        ) from None


def _labella(settings: Settings) -> LabellaPolicy:
    labella = settings.labella
    return LabellaPolicy(
        LabellaState(p=labella.p_init, p_min=labella.p_min, p_max=labella.p_max, delta=labella.delta)
    )


def _liu(settings: Settings) -> LiuPolicy:
    liu = settings.liu
    return LiuPolicy(
        LiuState(
            search_time_budget=liu.t_init,
            step_up=liu.step_up,
            step_down=liu.step_down,
            t_min=liu.t_min,
            t_max=liu.t_max,
        )
    )


def _adaptive(variant: EEEVariant) -> Callable[[Settings], AdaptiveBatteryPolicy]:
    def build(settings: Settings) -> AdaptiveBatteryPolicy:
        return AdaptiveBatteryPolicy(variant, settings.adaptation.weights, settings.adaptation.tau)

    return build


_BUILDERS: dict[Strategy, Callable[[Settings], EnergyPolicy]] = {
    Strategy.NAIVE: lambda settings: NaivePolicy(),
    Strategy.ADAPTIVE_WELL: _adaptive(EEEVariant.WELL),
    Strategy.ADAPTIVE_ILL: _adaptive(EEEVariant.ILL),
    Strategy.ADAPTIVE_NULL: _adaptive(EEEVariant.NULL),
    Strategy.LABELLA: _labella,
    Strategy.LIU: _liu,
    Strategy.LABELLA_NULL: lambda settings: compose(
        _labella(settings), _adaptive(EEEVariant.NULL)(settings)
    ),
    Strategy.LIU_NULL: lambda settings: compose(_liu(settings), _adaptive(EEEVariant.NULL)(settings)),
}


def build_policy(strategy: str | Strategy, settings: Settings) -> EnergyPolicy:
    """Fresh policy instance for one robot."""
    return _BUILDERS[parse_strategy(strategy)](settings)
