"""Evaluation, equality conversion and initialisation."""

import math

import numpy as np
import pytest

from islandde.core.exceptions import ConfigurationError
from islandde.core.random import RandomSource
from islandde.models.algorithm import AdaptationConfig
from islandde.models.problem import Bounds, EqualityConstraint, Problem
from islandde.services.population import Evaluator, convert_equality, evaluate, init_population
from islandde.services.problems import sphere

from tests.conftest import make_individual


def _first(x):
    return float(x[0])


class TestConvertEquality:
    @pytest.mark.parametrize("x,expected", [(0.05, -0.05), (0.3, 0.2), (0.0, -0.1)])
    def test_values(self, x, expected):
        equality = EqualityConstraint(evaluator=_first, target=0.0, tolerance=0.1)
        inequality = convert_equality(equality)
        assert inequality(np.array([x])) == pytest.approx(expected)

    @pytest.mark.parametrize("tolerance", [0.0, -1e-3])
    def test_rejects_non_positive_tolerance(self, tolerance):
        with pytest.raises(ConfigurationError):
            convert_equality(EqualityConstraint(evaluator=_first, tolerance=tolerance))


class TestEvaluate:
    def test_unconstrained_is_feasible_by_construction(self, sphere_problem):
        evaluated = evaluate(sphere_problem, make_individual([0.0, 0.0, 0.0]))
        assert evaluated.fitness == 0.0
        assert evaluated.violation == -math.inf

    def test_single_constraint(self):
        problem = Problem(
            name="half-plane",
            bounds=Bounds.uniform(-10.0, 10.0, 2),
            objective=sphere,
            constraints=(lambda x: 1.0 - x[0] - x[1],),
        )
        assert evaluate(problem, make_individual([0.2, 0.2])).violation == pytest.approx(0.6)

    def test_max_of_constraints(self):
        problem = Problem(
            name="two",
            bounds=Bounds.uniform(-10.0, 10.0, 2),
            objective=sphere,
            constraints=(lambda x: 1.0 - x[0] - x[1], lambda x: x[0] - 5.0),
        )
        assert evaluate(problem, make_individual([6.0, 0.0])).violation == pytest.approx(1.0)

    @pytest.mark.parametrize(
        "objective",
        [lambda x: math.nan, lambda x: math.inf, lambda x: 1.0 / 0.0],
    )
    def test_failures_become_worst(self, objective):
        problem = Problem(name="bad", bounds=Bounds.uniform(0.0, 1.0, 1), objective=objective)
        evaluated = evaluate(problem, make_individual([0.5]))
        assert (evaluated.fitness, evaluated.violation) == (math.inf, math.inf)

    def test_non_finite_constraint_becomes_worst(self):
        problem = Problem(
            name="bad-constraint",
            bounds=Bounds.uniform(0.0, 1.0, 1),
            objective=sphere,
            constraints=(lambda x: math.nan,),
        )
        evaluated = evaluate(problem, make_individual([0.5]))
        assert (evaluated.fitness, evaluated.violation) == (math.inf, math.inf)

    def test_counter(self, sphere_problem):
        evaluator = Evaluator(sphere_problem)
        for _ in range(7):
            evaluator.evaluate(make_individual([0.0, 0.0, 0.0]))
        assert evaluator.count == 7


class TestInitPopulation:
    def test_members_inside_unit_square(self):
        problem = Problem(name="unit", bounds=Bounds.uniform(0.0, 1.0, 2), objective=sphere)
        population = init_population(problem, 20, RandomSource(3))
        assert population.generation == 0
        assert population.size == 20
        assert population.within(problem.bounds)
        assert population.evaluated

    def test_too_small(self, sphere_problem):
        with pytest.raises(ConfigurationError) as exc_info:
            init_population(sphere_problem, 4, RandomSource(1))
        assert "5" in exc_info.value.message

    def test_seeded_populations_identical(self, sphere_problem):
        a = init_population(sphere_problem, 10, RandomSource(42))
        b = init_population(sphere_problem, 10, RandomSource(42))
        np.testing.assert_array_equal(a.positions, b.positions)
        assert [m.scale_factor for m in a] == [m.scale_factor for m in b]

    def test_parameters_in_range(self, sphere_problem):
        config = AdaptationConfig(f_min=0.2, f_max=0.8, cr_min=0.1, cr_max=0.4)
        population = init_population(sphere_problem, 50, RandomSource(5), adaptation=config)
        assert all(0.2 <= m.scale_factor <= 0.8 for m in population)
        assert all(0.1 <= m.crossover_prob <= 0.4 for m in population)

    def test_counts_evaluations(self, sphere_problem):
        evaluator = Evaluator(sphere_problem)
        init_population(sphere_problem, 12, RandomSource(0), evaluator=evaluator)
        assert evaluator.count == 12

    def test_latin_hypercube_strata(self):
        problem = Problem(name="unit", bounds=Bounds.uniform(0.0, 1.0, 3), objective=sphere)
        population = init_population(problem, 10, RandomSource(9), method="latin_hypercube")
        # Exactly one member per tenth of every axis
        strata = np.floor(population.positions * 10).astype(int)
        for j in range(3):
            assert sorted(strata[:, j]) == list(range(10))

    def test_adaptive_strategy_drawn_from_pool(self, sphere_problem):
        config = AdaptationConfig(adapt_strategy=True, strategy_pool=[2, 3])
        population = init_population(sphere_problem, 40, RandomSource(2), adaptation=config)
        assert {m.strategy for m in population} <= {2, 3}

    def test_fixed_strategy(self, sphere_problem):
        population = init_population(sphere_problem, 10, RandomSource(2), fixed_strategy=4)
        assert {m.strategy for m in population} == {4}
