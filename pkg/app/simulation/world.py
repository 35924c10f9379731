"""
The 2D arena: sensing, robot stepping, resource respawn and termination.

One World is one deterministic run: all randomness comes from its own
seeded numpy Generator and robots are always stepped in ascending id order.
"""

from __future__ import annotations

import time
import uuid
from collections import Counter
from collections.abc import Sequence

import numpy as np

from app.core.fsm import FsmParams, tick
from app.errors import SimulationFault
from app.models.battery import Battery
from app.models.record import (
    EventKind,
    EventLog,
    Payload,
    SimulationEvent,
    Termination,
    TerminationReason,
)
from app.models.robot import ABSORBING_STATES, Robot, RobotState, SensorReport
from app.strategies.base import StopRule, Strategy
from app.strategies.factory import build_policy, parse_strategy
from app.utils.logfire_config import RunSpan
from app.utils.logging import get_logger, log_performance, log_run_event
from config.settings import ArenaSettings, Settings

from .kinematics import TWO_PI, heading_away, move
from .resources import ResourcePool

logger = get_logger("world")

_WARN_EVENTS = frozenset({EventKind.DEATH})


class World:
    """Arena state plus the stepping loop."""

    def __init__(
        self,
        arena: ArenaSettings,
        params: FsmParams,
        robots: Sequence[Robot],
        resources: ResourcePool,
        rng: np.random.Generator,
        *,
        stop_rule: StopRule = StopRule.NONE,
        collection_success_probability: float = 1.0,
        run_id: str | None = None,
        strategy: str = "custom",
        seed: int | None = None,
    ) -> None:
        self.arena = arena
        self.params = params
        self.robots = sorted(robots, key=lambda robot: robot.id)
        self.resources = resources
        self.rng = rng
        self.stop_rule = stop_rule
        self.collection_success_probability = collection_success_probability
        self.run_id = run_id or uuid.uuid4().hex[:8]
        self.strategy = strategy
        self.seed = seed
        self.tick = 0
        self.tick_limit = arena.tick_limit
        self.event_log = EventLog()
        self.resources_delivered = 0
        self.termination: Termination | None = None
        self._contact_pairs: set[tuple[int, int]] = set()

    @classmethod
    def create(cls, settings: Settings, strategy: str | Strategy, swarm_size: int, seed: int) -> World:
        """
        Build a world with `swarm_size` homogeneous robots resting in the nest.

        Args:
            settings: Simulator settings
            strategy: Strategy every robot follows
            swarm_size: Number of robots K
            seed: Seed of the world's random stream
        """
        if swarm_size <= 0:
            raise SimulationFault(f"swarm size must be positive, got {swarm_size}")
        strategy = parse_strategy(strategy)
        rng = np.random.default_rng(seed)
        arena = settings.arena
        adaptation = settings.adaptation
        x_min, x_max, y_min, y_max = arena.nest_bounds

        robots = []
        for robot_id in range(swarm_size):
            policy = build_policy(strategy, settings)
            battery = policy.initial_battery(
                Battery.initial(adaptation.init_lower, adaptation.init_capacity)
            )
            robots.append(
                Robot(
                    id=robot_id,
                    x=float(rng.uniform(x_min, x_max)),
                    y=float(rng.uniform(y_min, y_max)),
                    heading=float(rng.uniform(0.0, TWO_PI)),
                    battery=battery,
                    policy=policy,
                )
            )

        return cls(
            arena,
            FsmParams(rates=settings.energy.rates, nest_delay=settings.energy.nest_delay),
            robots,
            ResourcePool(arena, rng),
            rng,
            stop_rule=robots[0].policy.stop_rule,
            collection_success_probability=settings.energy.collection_success_probability,
            run_id=f"{strategy.value}-k{swarm_size}-s{seed}",
            strategy=strategy.value,
            seed=seed,
        )

    def _robot_contacts(self) -> tuple[dict[int, int], dict[int, tuple[float, float]]]:
        """
        Contacts between mobile robots at the start of the tick.

        Returns the number of encounters each robot starts this tick (a pair
        already in contact on the previous tick does not count again) and, for
        every robot currently in contact, the position of its closest neighbour.
        """
        mobile = [robot for robot in self.robots if robot.is_mobile]
        if len(mobile) < 2:
            self._contact_pairs = set()
            return {}, {}
        positions = np.array([(robot.x, robot.y) for robot in mobile])
        diff = positions[:, None, :] - positions[None, :, :]
        d2 = (diff ** 2).sum(axis=-1)
        np.fill_diagonal(d2, np.inf)
        close = d2 <= self.arena.collision_radius ** 2

        rows, cols = np.nonzero(np.triu(close))
        pairs = {(mobile[i].id, mobile[j].id) for i, j in zip(rows.tolist(), cols.tolist())}
        counts: Counter[int] = Counter()
        for a, b in pairs - self._contact_pairs:
            counts[a] += 1
            counts[b] += 1
        self._contact_pairs = pairs

        nearest = {}
        for i in np.flatnonzero(close.any(axis=1)).tolist():
            j = int(np.argmin(d2[i]))
            nearest[mobile[i].id] = (mobile[j].x, mobile[j].y)
        return dict(counts), nearest

    def _record(self, robot: Robot, events: list[tuple[EventKind, Payload]]) -> None:
        for kind, payload in events:
            self.event_log.append(SimulationEvent(self.tick, robot.id, kind, payload))
            level = "WARNING" if kind in _WARN_EVENTS else "DEBUG"
            log_run_event(self.run_id, self.tick, robot.id, kind.value, dict(payload), level=level)

    def step(self) -> None:
        """
        Advance the world by one tick.

        Raises:
            SimulationFault: If the world has already terminated
        """
        if self.terminated().done:
            raise SimulationFault(f"step on terminated world {self.run_id}")

        arena = self.arena
        contacts, nearest = self._robot_contacts()

        for robot in self.robots:
            if robot.state in ABSORBING_STATES:
                continue
            motion = robot.state
            resource_index = None
            succeeds = True
            if motion is RobotState.SEARCHING:
                resource_index = self.resources.nearest_within(robot.x, robot.y, arena.sensing_radius)
                if resource_index is not None and self.collection_success_probability < 1.0:
                    succeeds = bool(self.rng.random() < self.collection_success_probability)

            report = SensorReport(
                resource_contact=resource_index is not None,
                robot_contacts=contacts.get(robot.id, 0),
                in_nest=arena.in_nest(robot.x, robot.y),
                collection_succeeds=succeeds,
            )
            result = tick(robot, report, self.params, self.rng)

            if result.picked_up and resource_index is not None:
                self.resources.take(resource_index)
            if result.deposited:
                self.resources_delivered += 1
            if result.moved:
                if motion is RobotState.SEARCHING and robot.id in nearest:
                    robot.heading = heading_away(robot.x, robot.y, nearest[robot.id])
                move(
                    robot,
                    motion,
                    speed=arena.robot_speed,
                    turn_noise=arena.turn_noise,
                    width=arena.width,
                    height=arena.height,
                    home=arena.nest_center,
                    rng=self.rng,
                )
            self._record(robot, result.events)

        self.resources.flush_respawns()
        self.tick += 1

    def terminated(self) -> Termination:
        """Whether the run is over, and why."""
        alive = [robot for robot in self.robots if robot.is_alive]
        if not alive:
            return Termination(True, TerminationReason.ALL_DEAD)
        if self.resources.exhausted and not any(robot.carrying for robot in alive):
            return Termination(True, TerminationReason.ALL_COLLECTED)
        if all(robot.state is RobotState.INACTIVE for robot in alive):
            return Termination(True, TerminationReason.EEE_STOP)
        if self.stop_rule is StopRule.NO_ROBOT_FORAGING and all(
            robot.policy.in_eee and not robot.is_mobile for robot in alive
        ):
            return Termination(True, TerminationReason.EEE_STOP)
        if self.tick >= self.tick_limit:
            return Termination(True, TerminationReason.TICK_LIMIT)
        return Termination(False)

    def finalize(self, reason: TerminationReason) -> None:
        """Close the event log with each robot's residual charge and in-flight spending."""
        for robot in self.robots:
            in_flight = robot.round.energy_spent if robot.is_mobile else 0.0
            self._record(
                robot,
                [
                    (
                        EventKind.FINAL,
                        {
                            "state": robot.state.value,
                            "level": robot.battery.level if robot.is_alive else 0.0,
                            "in_flight_spent": in_flight,
                            "energy_depleted": robot.energy_depleted,
                            "reason": reason.value,
                        },
                    )
                ],
            )
        self.termination = Termination(True, reason)

    def run(self) -> Termination:
        """Step until a stopping condition holds, then finalize the log."""
        if self.termination is not None:
            raise SimulationFault(f"world {self.run_id} already ran")

        started = time.perf_counter()
        with RunSpan(self.strategy, len(self.robots), -1 if self.seed is None else self.seed):
            status = self.terminated()
            while not status.done:
                self.step()
                status = self.terminated()
            if status.reason is None:
                raise SimulationFault(f"world {self.run_id} stopped without a reason")
            self.finalize(status.reason)

        log_performance(
            f"run {self.run_id}",
            time.perf_counter() - started,
            details={"ticks": self.tick, "reason": status.reason.value, "delivered": self.resources_delivered},
        )
        if status.reason is TerminationReason.TICK_LIMIT:
            logger.warning(f"Run {self.run_id} hit the tick limit ({self.tick_limit})")
        return status
