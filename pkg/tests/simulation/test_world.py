"""
Mundo 2D: cenário-oráculo, contatos, término e determinismo.
"""

import io
import math

import numpy as np
import pytest

from app.core.fsm import FsmParams
from app.errors import SimulationFault
from app.metrics.efficiency import build_run_record, eta_prime
from app.models.battery import Battery, EnergyRates
from app.models.record import EventKind, TerminationReason
from app.models.robot import Robot, RobotState
from app.simulation.resources import ResourcePool
from app.simulation.world import World
from app.strategies.baselines import NaivePolicy
from config.loader import build_settings
from config.settings import ArenaSettings


def small_settings(**sections):
    values = {
        "arena": {
            "width": "4",
            "height": "4",
            "nest_width": "0.8",
            "nest_height": "0.8",
            "initial_resources": "10",
            "target_collected": "20",
            "tick_limit": "20000",
        }
    }
    for section, fields in sections.items():
        values.setdefault(section, {}).update(fields)
    return build_settings(values)


def corridor_world() -> World:
    """One robot heading straight (+x) from the nest centre towards one resource."""
    arena = ArenaSettings(
        nest_width=0.92, nest_height=0.92, robot_speed=0.05, turn_noise=0.0, initial_resources=1, target_collected=0
    )
    rng = np.random.default_rng(0)
    policy = NaivePolicy()
    robot = Robot(
        id=0, x=5.0, y=5.0, heading=0.0, battery=policy.initial_battery(Battery.initial(0.3, 0.5)), policy=policy
    )
    pool = ResourcePool(arena, rng, positions=[(6.02, 5.0)])
    return World(arena, FsmParams(rates=EnergyRates()), [robot], pool, rng, strategy="naive", seed=0)


class TestCorridorOracle:
    """Closed-form round cost with distance / speed substituted for t_s and t_r."""

    def test_round_energy_matches_closed_form(self):
        world = corridor_world()
        status = world.run()

        rates = EnergyRates()
        t_search = 18  # ceil((6.02 - 0.15 - 5.0) / 0.05)
        t_retreat = 9  # ceil((5.9 - 5.46) / 0.05)
        expected = rates.alpha_s * t_search + rates.p + rates.alpha_r * t_retreat

        (arrive,) = world.event_log.of_kind(EventKind.ARRIVE)
        assert arrive.payload["t_search"] == t_search
        assert arrive.payload["t_retreat"] == t_retreat
        assert arrive.payload["energy_spent"] == pytest.approx(expected, abs=1e-9)
        assert status.reason is TerminationReason.ALL_COLLECTED
        assert world.tick == 30
        assert world.resources_delivered == 1

    def test_record_of_corridor_run(self):
        world = corridor_world()
        status = world.run()
        record = build_run_record(
            world.event_log, strategy="naive", swarm_size=1, seed=0, total_ticks=world.tick, reason=status.reason
        )
        assert record.resources_collected == 1
        assert record.sum_depleted == pytest.approx(0.037, abs=1e-9)
        assert record.sum_residual == pytest.approx(0.963, abs=1e-9)
        assert eta_prime(record) == pytest.approx(1.0, abs=1e-9)


class TestCreate:
    def test_robots_start_in_nest(self):
        settings = small_settings()
        world = World.create(settings, "adaptive-null", 6, seed=3)
        assert [robot.id for robot in world.robots] == list(range(6))
        assert all(settings.arena.in_nest(robot.x, robot.y) for robot in world.robots)
        assert all(robot.state is RobotState.CHARGING for robot in world.robots)
        assert all(robot.battery.level == pytest.approx(0.8) for robot in world.robots)
        assert len({id(robot.policy) for robot in world.robots}) == 6

    def test_rejects_empty_swarm(self):
        with pytest.raises(SimulationFault):
            World.create(small_settings(), "naive", 0, seed=1)


class TestContacts:
    def test_symmetric_encounters(self):
        world = World.create(small_settings(), "naive", 3, seed=1)
        a, b, c = world.robots
        a.x, a.y, a.state = 1.0, 1.0, RobotState.SEARCHING
        b.x, b.y, b.state = 1.1, 1.0, RobotState.RETREATING
        c.x, c.y, c.state = 1.05, 1.05, RobotState.CHARGING
        counts, nearest = world._robot_contacts()
        assert counts == {0: 1, 1: 1}
        assert nearest == {0: (1.1, 1.0), 1: (1.0, 1.0)}

    def test_far_robots_do_not_meet(self):
        world = World.create(small_settings(), "naive", 2, seed=1)
        for robot, x in zip(world.robots, (0.5, 3.5)):
            robot.x, robot.y, robot.state = x, 0.5, RobotState.SEARCHING
        assert world._robot_contacts() == ({}, {})

    def test_lasting_contact_counts_once(self):
        world = World.create(small_settings(), "naive", 2, seed=1)
        for robot, x in zip(world.robots, (1.0, 1.1)):
            robot.x, robot.y, robot.state = x, 1.0, RobotState.SEARCHING
        assert world._robot_contacts()[0] == {0: 1, 1: 1}
        counts, nearest = world._robot_contacts()
        assert counts == {}
        assert set(nearest) == {0, 1}

    def test_touching_robots_separate(self):
        """Two searchers 0.1 m apart, facing each other, with no turn noise."""
        arena = ArenaSettings(turn_noise=0.0, initial_resources=1, target_collected=0)
        rng = np.random.default_rng(0)
        robots = []
        for robot_id, (x, heading) in enumerate([(2.0, 0.0), (2.1, math.pi)]):
            policy = NaivePolicy()
            robots.append(
                Robot(
                    id=robot_id,
                    x=x,
                    y=2.0,
                    heading=heading,
                    battery=policy.initial_battery(Battery.initial(0.3, 0.5)),
                    policy=policy,
                    state=RobotState.SEARCHING,
                )
            )
        pool = ResourcePool(arena, rng, positions=[(9.5, 9.5)])
        world = World(arena, FsmParams(rates=EnergyRates()), robots, pool, rng, strategy="naive", seed=0)

        gaps = []
        for _ in range(5):
            world.step()
            a, b = world.robots
            gaps.append(math.dist(a.position, b.position))
        assert gaps[0] > arena.collision_radius
        assert gaps == sorted(gaps)
        assert [robot.round.encounters for robot in world.robots] == [1, 1]
        assert all(robot.state is RobotState.SEARCHING for robot in world.robots)


class TestTermination:
    def test_all_parked(self):
        world = World.create(small_settings(), "adaptive-null", 2, seed=1)
        for robot in world.robots:
            robot.state = RobotState.INACTIVE
        assert world.terminated().reason is TerminationReason.EEE_STOP

    def test_all_dead_wins(self):
        world = World.create(small_settings(arena={"initial_resources": "0", "target_collected": "0"}), "naive", 2, seed=1)
        for robot in world.robots:
            robot.state = RobotState.DEAD
        assert world.terminated().reason is TerminationReason.ALL_DEAD

    def test_nothing_left_to_collect(self):
        world = World.create(small_settings(arena={"initial_resources": "0", "target_collected": "0"}), "naive", 2, seed=1)
        assert world.terminated().reason is TerminationReason.ALL_COLLECTED

    def test_no_robot_foraging_in_endgame(self):
        world = World.create(small_settings(), "adaptive-well", 2, seed=1)
        for robot in world.robots:
            robot.policy.eee.latch()
        assert world.terminated().reason is TerminationReason.EEE_STOP
        world.robots[0].state = RobotState.SEARCHING
        assert not world.terminated().done

    def test_tick_limit(self):
        world = World.create(small_settings(arena={"tick_limit": "5"}), "naive", 2, seed=1)
        status = world.run()
        assert status.reason is TerminationReason.TICK_LIMIT
        assert world.tick == 5
        assert len(world.event_log.of_kind(EventKind.FINAL)) == 2

    def test_terminated_world_rejects_steps(self):
        world = World.create(small_settings(arena={"tick_limit": "3"}), "naive", 1, seed=1)
        world.run()
        with pytest.raises(SimulationFault):
            world.step()
        with pytest.raises(SimulationFault):
            world.run()


class TestRuns:
    @pytest.mark.parametrize("strategy", ["naive", "adaptive-null", "labella+null", "liu"])
    def test_energy_bookkeeping(self, strategy):
        world = World.create(small_settings(), strategy, 4, seed=11)
        status = world.run()
        record = build_run_record(
            world.event_log, strategy=strategy, swarm_size=4, seed=11, total_ticks=world.tick, reason=status.reason
        )
        for robot, depleted in zip(world.robots, record.depleted):
            assert depleted == pytest.approx(robot.energy_depleted, abs=1e-9)
        assert record.resources_collected == world.resources_delivered
        assert record.resources_collected <= 10 + 20
        assert all(0.0 <= robot.battery.level <= 1.0 for robot in world.robots)

    @pytest.mark.parametrize(
        "strategy", ["naive", "adaptive-well", "adaptive-ill", "adaptive-null", "labella", "liu+null"]
    )
    def test_round_accounting_identity(self, strategy):
        """Departure level minus arrival level is the round's energy_spent."""
        settings = small_settings()
        rates = settings.energy.rates
        world = World.create(settings, strategy, 4, seed=23)
        world.run()

        departed: dict[int, float] = {}
        rounds = 0
        for event in world.event_log:
            if event.kind is EventKind.DEPART:
                departed[event.robot] = event.payload["level"]
            elif event.kind is EventKind.ARRIVE:
                payload = event.payload
                spent = payload["energy_spent"]
                assert departed.pop(event.robot) - payload["level"] == pytest.approx(spent, abs=1e-9)
                if payload["level"] > 0.0:
                    expected = (
                        rates.alpha_s * payload["t_search"]
                        + rates.alpha_r * payload["t_retreat"]
                        + (rates.p if payload["success"] else 0.0)
                    )
                    assert spent == pytest.approx(expected, abs=1e-9)
                rounds += 1
        assert rounds > 0

    def test_same_seed_same_run(self):
        logs = []
        for _ in range(2):
            world = World.create(small_settings(), "adaptive-ill", 5, seed=99)
            world.run()
            stream = io.StringIO()
            world.event_log.write_tsv(stream)
            logs.append((stream.getvalue(), [robot.position for robot in world.robots]))
        assert logs[0] == logs[1]

    def test_different_seeds_differ(self):
        traces = []
        for seed in (1, 2):
            world = World.create(small_settings(arena={"tick_limit": "200"}), "naive", 3, seed=seed)
            world.run()
            traces.append([robot.position for robot in world.robots])
        assert traces[0] != traces[1]

    def test_collection_failure_blocks_pickups(self):
        settings = small_settings(
            arena={"width": "3", "height": "3", "nest_width": "0.6", "nest_height": "0.6", "tick_limit": "3000"},
            energy={"collection_success_probability": "0"},
        )
        world = World.create(settings, "naive", 4, seed=4)
        world.run()
        assert world.resources_delivered == 0
        assert not world.event_log.of_kind(EventKind.PICKUP)
        assert world.event_log.of_kind(EventKind.COLLECT_FAILED)
