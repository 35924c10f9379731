"""
Modelos de dados do simulador de forrageamento.
"""

from .battery import (
    FULL_CHARGE,
    AdaptationWeights,
    Battery,
    EnergyLevel,
    EnergyRates,
    RoundOutcome,
)
from .record import (
    EventKind,
    EventLog,
    SimulationEvent,
    Termination,
    TerminationReason,
)
from .robot import (
    ABSORBING_STATES,
    MOBILE_STATES,
    Robot,
    RobotState,
    RoundAccumulator,
    SensorReport,
)

__all__ = [
    # Battery models
    "FULL_CHARGE",
    "AdaptationWeights",
    "Battery",
    "EnergyLevel",
    "EnergyRates",
    "RoundOutcome",

    # Robot models
    "ABSORBING_STATES",
    "MOBILE_STATES",
    "Robot",
    "RobotState",
    "RoundAccumulator",
    "SensorReport",

    # Run records
    "EventKind",
    "EventLog",
    "SimulationEvent",
    "Termination",
    "TerminationReason",
]
