"""
Fixtures compartilhadas pelos testes do simulador.
"""

import numpy as np
import pytest

from app.models.battery import AdaptationWeights, Battery, EnergyRates
from app.models.robot import Robot, RobotState
from app.strategies.baselines import NaivePolicy
from config.loader import build_settings


@pytest.fixture
def settings():
    """Built-in defaults, no config file."""
    return build_settings({})


@pytest.fixture
def weights():
    return AdaptationWeights()


@pytest.fixture
def rates():
    return EnergyRates()


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def make_robot():
    """Factory for a robot parked at the arena centre."""

    def _make(
        level: float = 1.0,
        lower: float = 0.3,
        capacity: float = 0.5,
        state: RobotState = RobotState.SEARCHING,
        policy=None,
        **fields,
    ) -> Robot:
        upper = min(1.0, lower + capacity)
        battery = Battery(level=level, lower=lower, capacity=capacity, upper=upper)
        return Robot(
            id=fields.pop("id", 0),
            x=fields.pop("x", 5.0),
            y=fields.pop("y", 5.0),
            heading=fields.pop("heading", 0.0),
            battery=battery,
            policy=policy or NaivePolicy(),
            state=state,
            **fields,
        )

    return _make
