"""
Políticas de energia: adaptativa com fim de jogo, baselines e composição.
"""

import numpy as np
import pytest

from app.errors import ConfigError
from app.models.battery import AdaptationWeights, Battery, RoundOutcome
from app.strategies import (
    AdaptiveBatteryPolicy,
    ChargeDirective,
    EEEState,
    EEEVariant,
    LabellaPolicy,
    LabellaState,
    LiuPolicy,
    LiuState,
    NaivePolicy,
    StopRule,
    Strategy,
    adaptive_on_round_end,
    build_policy,
    compose,
    labella_update,
    liu_update,
    parse_strategy,
)


def battery(lower: float, capacity: float, level: float = 0.2) -> Battery:
    return Battery(level=level, lower=lower, capacity=capacity, upper=min(1.0, lower + capacity))


class TestAdaptive:
    def test_before_endgame_targets_adapted_upper(self, weights):
        eee = EEEState()
        outcome = RoundOutcome(success=False, energy_spent=0.5, encounters=2)
        directive = adaptive_on_round_end(battery(0.3, 0.5), outcome, eee, EEEVariant.WELL, weights, 10)
        assert directive.battery.lower == pytest.approx(0.41)
        assert directive.target_level == 1.0
        assert not directive.park
        assert directive.extra_nest_delay == 0
        assert not eee.triggered

    def test_initial_target_is_upper(self, weights):
        eee = EEEState()
        outcome = RoundOutcome(success=True, energy_spent=0.5)
        directive = adaptive_on_round_end(battery(0.3, 0.5), outcome, eee, EEEVariant.NULL, weights, 10)
        assert directive.target_level == pytest.approx(0.8)
        assert directive.battery.level == directive.target_level

    def test_well_grows_nest_delay(self, weights):
        eee = EEEState(triggered=True, rounds_since_trigger=1, current_extra_delay=10)
        before = battery(0.41, 0.62)
        directive = adaptive_on_round_end(before, RoundOutcome(), eee, EEEVariant.WELL, weights, 10)
        assert directive == ChargeDirective(
            battery=before.charged_to(1.0), target_level=1.0, extra_nest_delay=20
        )
        assert eee.rounds_since_trigger == 2

    def test_well_freezes_thresholds(self, weights):
        eee = EEEState(triggered=True)
        before = battery(0.6, 0.5)
        outcome = RoundOutcome(success=False, encounters=5, energy_spent=0.1)
        directive = adaptive_on_round_end(before, outcome, eee, EEEVariant.WELL, weights, 10)
        assert directive.battery.lower == before.lower
        assert directive.battery.capacity == before.capacity

    def test_ill_keeps_adapting_lower(self, weights):
        eee = EEEState(triggered=True)
        before = battery(0.6, 0.5)
        outcome = RoundOutcome(success=False, energy_spent=0.5, encounters=2)
        directive = adaptive_on_round_end(before, outcome, eee, EEEVariant.ILL, weights, 10)
        assert directive.battery.lower == pytest.approx(0.71)
        assert directive.battery.capacity == before.capacity
        assert directive.extra_nest_delay == 10

    def test_null_parks_at_full(self, weights):
        eee = EEEState()
        directive = adaptive_on_round_end(battery(0.41, 0.62), RoundOutcome(), eee, EEEVariant.NULL, weights, 10)
        assert directive.park
        assert directive.target_level == 1.0
        assert eee.triggered

    def test_trigger_latches(self, weights):
        eee = EEEState(triggered=True)
        directive = adaptive_on_round_end(battery(0.1, 0.1), RoundOutcome(), eee, EEEVariant.NULL, weights, 10)
        assert directive.park

    def test_stop_rules(self, weights):
        assert AdaptiveBatteryPolicy(EEEVariant.NULL, weights, 10).stop_rule is StopRule.EACH_ROBOT_PARKED
        assert AdaptiveBatteryPolicy(EEEVariant.ILL, weights, 10).stop_rule is StopRule.NO_ROBOT_FORAGING

    def test_park_requires_full_charge(self):
        with pytest.raises(ValueError):
            ChargeDirective(battery=battery(0.3, 0.5), target_level=0.8, park=True)


class TestNaive:
    def test_always_full(self):
        policy = NaivePolicy()
        state = battery(0.3, 0.5)
        for success in (True, False) * 50:
            directive = policy.on_round_end(state, RoundOutcome(success=success, energy_spent=0.2))
            assert directive.target_level == 1.0
            state = directive.battery
        assert state.lower == 0.3
        assert state.capacity == 0.5


class TestLabella:
    @pytest.mark.parametrize(
        "p, success, expected",
        [(0.033, True, 0.038), (0.048, True, 0.05), (0.002, False, 0.0015), (0.033, False, 0.028)],
    )
    def test_update(self, p, success, expected):
        assert labella_update(LabellaState(p=p), success).p == pytest.approx(expected, abs=1e-12)

    def test_departure_is_probabilistic(self, make_robot):
        policy = LabellaPolicy(LabellaState(p=0.05))
        rng = np.random.default_rng(3)
        departures = sum(policy.may_depart(make_robot(), rng) for _ in range(20000))
        assert 800 < departures < 1200

    def test_random_updates_stay_in_bounds(self):
        rng = np.random.default_rng(11)
        state = LabellaState()
        for _ in range(5000):
            state = labella_update(state, bool(rng.random() < 0.5))
            assert state.p_min <= state.p <= state.p_max


class TestLiu:
    def test_failure_extends_budget(self):
        assert liu_update(LiuState(), success=False).search_time_budget == 220

    def test_success_shortens_budget(self):
        assert liu_update(LiuState(), success=True).search_time_budget == 190

    def test_clamped_at_max(self):
        state = LiuState(search_time_budget=1000)
        assert liu_update(state, success=False).search_time_budget == 1000

    def test_random_updates_stay_in_bounds(self):
        rng = np.random.default_rng(12)
        policy = LiuPolicy(LiuState())
        for _ in range(5000):
            policy.on_round_end(battery(0.3, 0.5), RoundOutcome(success=bool(rng.random() < 0.5)))
            limit = policy.search_time_limit()
            assert limit is not None and 50 <= limit <= 1000


class TestComposite:
    def test_labella_null_gates_departure_and_targets_upper(self, weights, make_robot):
        policy = compose(LabellaPolicy(LabellaState(p=0.0015)), AdaptiveBatteryPolicy(EEEVariant.NULL, weights, 10))
        assert policy.strategy is Strategy.LABELLA_NULL
        directive = policy.on_round_end(battery(0.3, 0.5), RoundOutcome(success=True, energy_spent=0.5))
        assert directive.target_level == pytest.approx(0.8)
        assert policy.base.state.p == pytest.approx(0.0065)
        rng = np.random.default_rng(0)
        assert sum(policy.may_depart(make_robot(), rng) for _ in range(1000)) < 30

    def test_liu_null_uses_search_budget(self, weights):
        policy = compose(LiuPolicy(LiuState()), AdaptiveBatteryPolicy(EEEVariant.NULL, weights, 10))
        assert policy.strategy is Strategy.LIU_NULL
        assert policy.search_time_limit() == 200
        assert policy.stop_rule is StopRule.EACH_ROBOT_PARKED

    def test_composite_parks_in_endgame(self, weights):
        policy = compose(LabellaPolicy(LabellaState()), AdaptiveBatteryPolicy(EEEVariant.NULL, weights, 10))
        assert policy.on_round_end(battery(0.41, 0.62), RoundOutcome()).park
        assert policy.in_eee

    def test_two_battery_targeting_policies_rejected(self, weights):
        with pytest.raises(ConfigError):
            compose(
                AdaptiveBatteryPolicy(EEEVariant.WELL, weights, 10),
                AdaptiveBatteryPolicy(EEEVariant.NULL, weights, 10),
            )

    def test_unsupported_combination_rejected(self, weights):
        with pytest.raises(ConfigError):
            compose(LabellaPolicy(LabellaState()), AdaptiveBatteryPolicy(EEEVariant.WELL, weights, 10))


class TestFactory:
    @pytest.mark.parametrize("strategy", list(Strategy))
    def test_every_strategy_builds(self, strategy, settings):
        policy = build_policy(strategy, settings)
        assert policy.strategy is strategy

    def test_policies_are_not_shared(self, settings):
        assert build_policy("labella", settings) is not build_policy("labella", settings)

    def test_unknown_name_lists_valid_names(self):
        with pytest.raises(ConfigError) as error:
            parse_strategy("bogus")
        assert "adaptive-null" in str(error.value)
        assert error.value.field == "strategy"

    def test_names_are_case_insensitive(self):
        assert parse_strategy(" Adaptive-Null ") is Strategy.ADAPTIVE_NULL
