"""Diversity score and epidemic restarts."""

import math

import numpy as np
import pytest

from islandde.core.exceptions import UndefinedDiversityError
from islandde.core.random import RandomSource
from islandde.models.algorithm import AdaptationConfig, EpidemicConfig
from islandde.models.problem import Bounds, Problem
from islandde.services.constraints import rank
from islandde.services.epidemic import diversity_score, epidemic_sizes, maybe_epidemic
from islandde.services.population import Evaluator, PopulationInitializer
from islandde.services.problems import sphere

from tests.conftest import make_population

COLLAPSED = EpidemicConfig(d_tol=1e-3, rho_elite=0.1, rho_ill=1.0, cooldown=1000)


def _collapsed(problem, size, jitter=1e-9):
    return make_population([[1.0 + jitter * k, -1.0, 2.0] for k in range(size)], problem)


def _initializer(problem):
    return PopulationInitializer(problem, AdaptationConfig(), Evaluator(problem))


class TestDiversityScore:
    def test_identical_members(self, sphere_problem):
        population = make_population([[1.0, 2.0, 3.0]] * 5, sphere_problem)
        assert diversity_score(population, sphere_problem.bounds) == 0.0

    def test_single_normalised_pair(self, sphere_problem):
        population = make_population([[0.0], [10.0]], sphere_problem)
        assert diversity_score(population, Bounds.uniform(0.0, 10.0, 1)) == pytest.approx(1.0)

    def test_opposite_corners(self, sphere_problem):
        bounds = sphere_problem.bounds
        population = make_population([bounds.lower, bounds.upper], sphere_problem)
        assert diversity_score(population, bounds) == pytest.approx(math.sqrt(3))

    def test_single_member_undefined(self, sphere_problem):
        population = make_population([[0.0, 0.0, 0.0]], sphere_problem)
        with pytest.raises(UndefinedDiversityError):
            diversity_score(population, sphere_problem.bounds)

    def test_within_range_on_random_populations(self, sphere_problem):
        generator = np.random.default_rng(5)
        bounds = sphere_problem.bounds
        for _ in range(1000):
            size = int(generator.integers(2, 12))
            points = generator.uniform(-5.0, 5.0, (size, 3))
            population = make_population(points, sphere_problem)
            assert 0.0 <= diversity_score(population, bounds) <= math.sqrt(3) + 1e-12


class TestEpidemic:
    def test_sizes(self):
        assert epidemic_sizes(COLLAPSED, 64) == (6, 58)
        assert epidemic_sizes(EpidemicConfig(rho_elite=0.0), 10) == (1, 9)
        assert epidemic_sizes(EpidemicConfig(rho_elite=0.1, rho_ill=0.5), 40) == (4, 18)

    def test_diverse_population_unchanged(self, sphere_problem, rng):
        population = make_population(np.eye(3) * 4.0, sphere_problem)
        outcome = maybe_epidemic(
            population,
            COLLAPSED,
            1000,
            0,
            _initializer(sphere_problem),
            rng,
            eps=0.0,
            bounds=sphere_problem.bounds,
            original_bounds=sphere_problem.bounds,
        )
        assert not outcome.fired
        assert outcome.population is population

    def test_collapsed_population_restarts(self, sphere_problem, rng):
        population = _collapsed(sphere_problem, 64)
        outcome = maybe_epidemic(
            population,
            COLLAPSED,
            1000,
            0,
            _initializer(sphere_problem),
            rng,
            eps=0.0,
            bounds=sphere_problem.bounds,
            original_bounds=sphere_problem.bounds,
        )
        assert outcome.fired
        assert outcome.population.size == 64
        kept = [i for i in range(64) if outcome.population[i] is population[i]]
        assert len(kept) == 6
        assert kept == sorted(rank(population.members, 0.0)[:6])
        assert outcome.diversity == diversity_score(outcome.population, sphere_problem.bounds)
        assert outcome.diversity > COLLAPSED.d_tol
        assert outcome.population.within(sphere_problem.bounds)

    def test_restart_restores_diversity_across_trials(self):
        generator = np.random.default_rng(41)
        failures = 0
        for trial in range(100):
            dimension = int(generator.integers(2, 11))
            size = int(generator.integers(8, 65))
            problem = Problem(
                name="sphere", bounds=Bounds.uniform(-5.0, 5.0, dimension), objective=sphere
            )
            center = generator.uniform(-5.0, 5.0, dimension)
            points = np.clip(center + generator.normal(0.0, 1e-6, (size, dimension)), -5.0, 5.0)
            population = make_population(points, problem)
            assert diversity_score(population, problem.bounds) <= COLLAPSED.d_tol

            outcome = maybe_epidemic(
                population,
                COLLAPSED,
                1000,
                0,
                _initializer(problem),
                RandomSource(seed=trial),
                eps=0.0,
                bounds=problem.bounds,
                original_bounds=problem.bounds,
            )
            assert outcome.fired
            failures += outcome.diversity <= COLLAPSED.d_tol
        assert failures <= 1

    def test_cooldown_blocks_second_restart(self, sphere_problem, rng):
        population = _collapsed(sphere_problem, 20)
        kwargs = {
            "eps": 0.0,
            "bounds": sphere_problem.bounds,
            "original_bounds": sphere_problem.bounds,
        }
        initializer = _initializer(sphere_problem)
        first = maybe_epidemic(population, COLLAPSED, 1000, 0, initializer, rng, **kwargs)
        second = maybe_epidemic(population, COLLAPSED, 1100, 1000, initializer, rng, **kwargs)
        assert first.fired
        assert not second.fired

    def test_disabled_never_fires(self, sphere_problem, rng):
        population = _collapsed(sphere_problem, 20)
        outcome = maybe_epidemic(
            population,
            EpidemicConfig(enabled=False),
            5000,
            0,
            _initializer(sphere_problem),
            rng,
            eps=0.0,
            bounds=sphere_problem.bounds,
            original_bounds=sphere_problem.bounds,
        )
        assert not outcome.fired

    def test_reinitialises_over_requested_domain(self, sphere_problem, rng):
        population = _collapsed(sphere_problem, 20)
        narrow = Bounds.uniform(0.5, 2.5, 3)
        for domain, box in (("current", narrow), ("original", sphere_problem.bounds)):
            config = COLLAPSED.model_copy(update={"reinit_domain": domain})
            outcome = maybe_epidemic(
                population,
                config,
                1000,
                0,
                _initializer(sphere_problem),
                rng,
                eps=0.0,
                bounds=narrow,
                original_bounds=sphere_problem.bounds,
            )
            pairs = zip(outcome.population.members, population.members, strict=True)
            fresh = [new for new, old in pairs if new is not old]
            assert fresh
            assert all(box.contains(m.x) for m in fresh)
