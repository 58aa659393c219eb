import numpy as np
import pytest

from basisket import (
    GameConfig,
    alice_interval_decide,
    bob_pick,
    distance_from_class,
    estimate_win_rate,
    play_round,
)
from basisket.game import _game_context

RANK4 = ("C2", "C2")  # rho = 10, pivot distance 2


class TestGameConfig:
    def test_valid(self):
        GameConfig(RANK4, "pivot", "interval_threshold", trials=10, seed=0)

    def test_unknown_strategies(self):
        with pytest.raises(ValueError, match="unknown Bob strategy"):
            GameConfig(RANK4, "psychic", "interval_threshold", 10, 0)
        with pytest.raises(ValueError, match="unknown Alice strategy"):
            GameConfig(RANK4, "pivot", "psychic", 10, 0)

    def test_at_distance_needs_distance(self):
        with pytest.raises(ValueError, match="needs a positive distance"):
            GameConfig(RANK4, "at_distance", "always_yes", 10, 0)

    def test_trials_positive(self):
        with pytest.raises(ValueError, match="trials"):
            GameConfig(RANK4, "pivot", "always_yes", 0, 0)


class TestAliceIntervalDecide:
    def test_confident_yes_region(self):
        # length 16: yes for d <= 2
        assert alice_interval_decide(1, 4) is True
        assert alice_interval_decide(2, 4) is True
        assert alice_interval_decide(3, 4) is False

    def test_rho_spike(self):
        assert alice_interval_decide(10, 4, rho=10) is True
        assert alice_interval_decide(10, 4, rho=None) is False
        assert alice_interval_decide(9, 4, rho=10) is False

    def test_members_excluded(self):
        with pytest.raises(ValueError, match="distance 0"):
            alice_interval_decide(0, 4)


class TestBobPick:
    def test_at_distance_hits_the_exact_distance(self):
        for d in (1, 2, 3, 5):
            h, nearest = bob_pick(RANK4, "at_distance", seed=11, distance=d)
            assert nearest.distance == d
            assert h.length == 16

    def test_deterministic_given_seed(self):
        a = bob_pick(RANK4, "at_distance", seed=4, distance=3)
        b = bob_pick(RANK4, "at_distance", seed=4, distance=3)
        assert a == b

    def test_pivot_targets_an_eighth_of_the_length(self):
        _, nearest = bob_pick(RANK4, "pivot", seed=5)
        assert nearest.distance == 16 // 8

    def test_uniform_random_avoids_the_class(self):
        _, basis, _, _ = _game_context(RANK4)
        for seed in range(5):
            h, nearest = bob_pick(RANK4, "uniform_random", seed=seed)
            assert nearest.distance >= 1
            assert nearest == distance_from_class(basis, h)

    def test_probe_fallback_reaches_the_rho_singleton(self):
        # only the all-ones function sits at distance 10; random flips
        # almost never find it, the probe list always does
        _, nearest = bob_pick(RANK4, "at_distance", seed=0, distance=10)
        assert nearest.distance == 10

    def test_unreachable_distance_raises(self):
        with pytest.raises(ValueError, match="no function at distance 12"):
            bob_pick(RANK4, "at_distance", seed=0, distance=12)

    def test_distance_bounds(self):
        with pytest.raises(ValueError, match="distance >= 1"):
            bob_pick(RANK4, "at_distance", seed=0, distance=0)
        with pytest.raises(ValueError, match="exceeds"):
            bob_pick(RANK4, "at_distance", seed=0, distance=17)


class TestPlayRound:
    def test_reproducible_round(self):
        config = GameConfig(RANK4, "uniform_random", "interval_threshold",
                            trials=1, seed=0)
        a = play_round(config, 123)
        b = play_round(config, 123)
        assert a == b

    def test_ground_truth_is_exact(self):
        _, basis, _, _ = _game_context(RANK4)
        config = GameConfig(RANK4, "at_distance", "interval_threshold",
                            trials=1, seed=0, bob_distance=2)
        for round_seed in range(10):
            record = play_round(config, round_seed)
            nearest = distance_from_class(basis, record.function)
            assert record.distance == nearest.distance == 2
            assert record.in_nearest == (record.outcome in nearest.indices)
            assert record.alice_yes is True  # 2 <= 16/8
            assert record.alice_wins == (record.alice_yes == record.in_nearest)

    def test_fixed_alice_strategies(self):
        yes = GameConfig(RANK4, "pivot", "always_yes", trials=1, seed=0)
        no = GameConfig(RANK4, "pivot", "always_no", trials=1, seed=0)
        assert play_round(yes, 7).alice_yes is True
        assert play_round(no, 7).alice_yes is False


class TestEstimateWinRate:
    def test_zero_threshold_distance_is_a_sure_win(self):
        # at distance 8 the nearest kets carry zero probability and Alice
        # says no, so she wins every round
        config = GameConfig(RANK4, "at_distance", "interval_threshold",
                            trials=200, seed=1, bob_distance=8)
        result = estimate_win_rate(config)
        assert result.rate == 1.0
        assert result.wins == 200
        assert result.standard_error == 0.0

    def test_rho_spike_is_a_sure_win(self):
        config = GameConfig(RANK4, "at_distance", "interval_threshold",
                            trials=50, seed=2, bob_distance=10)
        assert estimate_win_rate(config).rate == 1.0

    def test_distance_one_win_rate_matches_exact_threshold(self):
        # every distance-1 function scores theta = 49/64 and Alice says
        # yes, so her win rate is a Bernoulli(49/64) mean
        config = GameConfig(RANK4, "at_distance", "interval_threshold",
                            trials=1500, seed=3, bob_distance=1)
        result = estimate_win_rate(config)
        p = 49 / 64
        se = np.sqrt(p * (1 - p) / config.trials)
        assert abs(result.rate - p) < 4 * se

    def test_reproducible_aggregate(self):
        config = GameConfig(RANK4, "uniform_random", "interval_threshold",
                            trials=60, seed=9)
        assert estimate_win_rate(config) == estimate_win_rate(config)
