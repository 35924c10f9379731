"""
Per-robot finite state machine: Charging -> Searching -> (Collecting) ->
Retreating -> Charging, with death at zero energy and parking at the
endgame.

Within one tick events take precedence over motion: a resource contact or a
nest arrival is handled without draining, otherwise the robot drains one
tick of energy (and is moved by the world).
"""

from dataclasses import dataclass, field

import numpy as np

from app.errors import SimulationFault
from app.models.battery import EnergyRates
from app.models.record import EventKind, Payload
from app.models.robot import ABSORBING_STATES, Robot, RobotState, SensorReport

DEFAULT_NEST_DELAY = 20


@dataclass(frozen=True, slots=True)
class FsmParams:
    rates: EnergyRates = field(default_factory=EnergyRates)
    nest_delay: int = DEFAULT_NEST_DELAY


@dataclass(slots=True)
class TickResult:
    """Effects of one tick the world must apply."""
    moved: bool = False
    picked_up: bool = False
    deposited: bool = False
    events: list[tuple[EventKind, Payload]] = field(default_factory=list)


def _spend(robot: Robot, amount: float) -> float:
    """Take `amount` from the battery (never below zero) and book it."""
    spent = min(amount, robot.battery.level)
    robot.battery.level -= spent
    robot.round.energy_spent += spent
    robot.energy_depleted += spent
    return spent


def _retreat(robot: Robot, result: TickResult, reason: str) -> None:
    robot.state = RobotState.RETREATING
    result.events.append(
        (EventKind.RETREAT, {"reason": reason, "level": robot.battery.level, "t_search": robot.round.t_search})
    )


def _arrive(robot: Robot, params: FsmParams, result: TickResult) -> None:
    if robot.carrying:
        robot.carrying = False
        result.deposited = True
        result.events.append((EventKind.DEPOSIT, {}))
    acc = robot.round
    result.events.append(
        (
            EventKind.ARRIVE,
            {
                "success": acc.success,
                "encounters": acc.encounters,
                "energy_spent": acc.energy_spent,
                "t_search": acc.t_search,
                "t_retreat": acc.t_retreat,
                "level": robot.battery.level,
            },
        )
    )
    robot.rounds_completed += 1
    robot.state = RobotState.CHARGING
    robot.charged = False
    robot.nest_delay = params.nest_delay


def _die_if_empty(robot: Robot, sensed: SensorReport, result: TickResult) -> None:
    if robot.battery.level <= 0.0 and not sensed.in_nest:
        robot.battery.level = 0.0
        robot.state = RobotState.DEAD
        robot.carrying = False
        result.moved = False
        result.events.append(
            (EventKind.DEATH, {"energy_spent": robot.round.energy_spent, "rounds": robot.rounds_completed})
        )


def tick(robot: Robot, sensed: SensorReport, params: FsmParams, rng: np.random.Generator) -> TickResult:
    """
    Apply one tick of the state machine to `robot`.

    Args:
        robot: Robot to update in place
        sensed: Sensor report computed by the world for this tick
        params: Energy rates and nest delay
        rng: World random stream (only used by departure policies)

    Returns:
        What the world has to apply (motion, resource pickup, events)

    Raises:
        SimulationFault: If the robot is Dead or Inactive
    """
    if robot.state in ABSORBING_STATES:
        raise SimulationFault(f"robot {robot.id} ticked in absorbing state {robot.state.value}")

    if robot.state is RobotState.CHARGING:
        return charge_tick(robot, params, rng)

    result = TickResult()
    rates = params.rates
    battery = robot.battery

    if robot.state is RobotState.SEARCHING:
        if sensed.resource_contact:
            if sensed.collection_succeeds:
                robot.state = RobotState.COLLECTING
                cost = _spend(robot, rates.p)
                robot.carrying = True
                robot.round.success = True
                result.picked_up = True
                result.events.append((EventKind.PICKUP, {"cost": cost, "level": battery.level}))
                robot.state = RobotState.RETREATING
                _die_if_empty(robot, sensed, result)
                return result
            result.events.append((EventKind.COLLECT_FAILED, {}))

        if battery.level <= battery.lower:
            _retreat(robot, result, "low_energy")
            return result

        _spend(robot, rates.alpha_s)
        robot.round.t_search += 1
        robot.round.encounters += sensed.robot_contacts
        result.moved = True

        limit = robot.policy.search_time_limit()
        if battery.level <= battery.lower:
            _retreat(robot, result, "low_energy")
        elif limit is not None and robot.round.t_search >= limit:
            _retreat(robot, result, "search_budget")

    elif robot.state is RobotState.RETREATING:
        if sensed.in_nest:
            _arrive(robot, params, result)
            return result
        _spend(robot, rates.alpha_r)
        robot.round.t_retreat += 1
        robot.round.encounters += sensed.robot_contacts
        result.moved = True

    else:
        raise SimulationFault(f"robot {robot.id} in transient state {robot.state.value}")

    _die_if_empty(robot, sensed, result)
    return result


def charge_tick(robot: Robot, params: FsmParams, rng: np.random.Generator) -> TickResult:
    """
    One tick in the nest.

    Counts down the nest delay; once it expires the policy adapts to the
    finished round and the battery is set to the chosen target. A charged
    robot departs as soon as its policy allows it.

    Raises:
        SimulationFault: If the robot is not Charging
    """
    if robot.state is not RobotState.CHARGING:
        raise SimulationFault(f"charge_tick on robot {robot.id} in state {robot.state.value}")

    result = TickResult()
    if robot.nest_delay > 0:
        robot.nest_delay -= 1
        return result

    if not robot.charged:
        directive = robot.policy.on_round_end(robot.battery, robot.round.to_outcome())
        robot.battery = directive.battery.model_copy()
        robot.round.reset()
        robot.charged = True
        result.events.append(
            (
                EventKind.CHARGED,
                {
                    "level": directive.target_level,
                    "lower": directive.battery.lower,
                    "capacity": directive.battery.capacity,
                    "upper": directive.battery.upper,
                    "extra_nest_delay": directive.extra_nest_delay,
                },
            )
        )
        if directive.park:
            robot.state = RobotState.INACTIVE
            result.events.append((EventKind.PARK, {"level": robot.battery.level}))
            return result
        if directive.extra_nest_delay > 0:
            robot.nest_delay = directive.extra_nest_delay
            return result

    if robot.policy.may_depart(robot, rng):
        robot.state = RobotState.SEARCHING
        robot.round.departure_level = robot.battery.level
        result.events.append((EventKind.DEPART, {"level": robot.battery.level}))
    return result
