"""Mutation, crossover, clipping and selection."""

import numpy as np
import pytest

from islandde.core.exceptions import ConfigurationError
from islandde.models.algorithm import DONOR_INDICES
from islandde.models.individual import Population
from islandde.models.problem import Bounds
from islandde.services.engine import clip_bounds, crossover, draw_donor_indices, mutate, select

from tests.conftest import make_individual


def _population(rows):
    return Population.of([make_individual(r, f=float(k)) for k, r in enumerate(rows)])


class TestMutate:
    def test_strategy_1_without_scale_returns_first_donor(self):
        population = _population([[float(k), 2.0 * k] for k in range(6)])
        generator = np.random.default_rng(0)
        donor = mutate(population, 2, 1, 0.0, generator)
        r1 = draw_donor_indices(6, 2, 1, np.random.default_rng(0))[0]
        np.testing.assert_array_equal(donor, population.positions[r1])

    def test_strategy_3_collapses_to_target(self):
        population = _population([[1.5, -2.0]] * 6)
        donor = mutate(population, 0, 3, 0.8, np.random.default_rng(1))
        np.testing.assert_array_equal(donor, [1.5, -2.0])

    def test_strategy_2_example(self, monkeypatch):
        population = _population([[0.0], [5.0], [1.0], [7.0], [9.0]])
        monkeypatch.setattr(
            "islandde.services.engine.operators.draw_donor_indices",
            lambda *args: np.array([1, 2, 3]),
        )
        donor = mutate(population, 0, 2, 0.5, np.random.default_rng(0), x_best=np.array([2.0]))
        np.testing.assert_array_equal(donor, [4.0])

    @pytest.mark.parametrize("strategy", [2, 4])
    def test_best_strategies_need_best(self, strategy):
        population = _population([[float(k)] for k in range(6)])
        with pytest.raises(ValueError):
            mutate(population, 0, strategy, 0.5, np.random.default_rng(0))

    @pytest.mark.parametrize("size", [5, 6, 8, 16])
    @pytest.mark.parametrize("strategy", [1, 2, 3, 4])
    def test_donor_indices_distinct_and_exclude_target(self, size, strategy):
        if size < DONOR_INDICES[strategy] + 1:
            pytest.skip("population too small for strategy")
        generator = np.random.default_rng(size * 10 + strategy)
        for trial in range(10_000):
            target = trial % size
            r = draw_donor_indices(size, target, strategy, generator)
            assert len(set(r.tolist())) == DONOR_INDICES[strategy]
            assert target not in r
            assert r.min() >= 0 and r.max() < size

    def test_too_small_for_strategy_4(self):
        with pytest.raises(ConfigurationError):
            draw_donor_indices(4, 0, 4, np.random.default_rng(0))


class TestCrossover:
    def test_full_rate_takes_donor(self):
        trial = crossover(np.zeros(5), np.ones(5), 1.0, np.random.default_rng(0))
        np.testing.assert_array_equal(trial, np.ones(5))

    def test_zero_rate_takes_only_forced_component(self):
        trial = crossover(np.zeros(5), np.ones(5), 0.0, np.random.default_rng(0))
        assert trial.sum() == 1.0

    def test_single_dimension_takes_donor(self):
        for seed in range(20):
            trial = crossover(np.array([0.0]), np.array([3.0]), 0.0, np.random.default_rng(seed))
            assert trial[0] == 3.0

    @pytest.mark.parametrize("dimension", [1, 2, 5, 17])
    @pytest.mark.parametrize("rate", [0.0, 0.5, 1.0])
    def test_at_least_one_donor_component(self, dimension, rate):
        generator = np.random.default_rng(dimension)
        for _ in range(200):
            trial = crossover(np.zeros(dimension), np.ones(dimension), rate, generator)
            assert trial.sum() >= 1.0


class TestClipBounds:
    @pytest.mark.parametrize(
        "trial,lower,upper,expected",
        [
            ([1.7], 0.0, 1.0, [1.0]),
            ([0.4], 0.0, 1.0, [0.4]),
            ([-3.2], -1.0, 2.0, [-1.0]),
        ],
    )
    def test_saturation(self, trial, lower, upper, expected):
        clipped = clip_bounds(np.array(trial), Bounds.uniform(lower, upper, 1))
        np.testing.assert_array_equal(clipped, expected)


class TestSelect:
    def test_better_trial_wins(self):
        target, trial = make_individual([0.0], f=5.0), make_individual([1.0], f=3.0)
        assert select(target, trial, 0.0) is trial

    def test_tie_goes_to_trial(self):
        target, trial = make_individual([0.0], f=5.0), make_individual([1.0], f=5.0)
        assert select(target, trial, 0.0) is trial

    def test_feasible_target_beats_infeasible_trial(self):
        target = make_individual([0.0], f=100.0, psi_max=0.0)
        trial = make_individual([1.0], f=1.0, psi_max=0.5)
        assert select(target, trial, 0.0) is target
