"""One synchronous generation, checked against a straight-line reference."""

import numpy as np
import pytest

from islandde.core.random import RandomSource, StreamPurpose
from islandde.core.workers import WorkerPool
from islandde.models.algorithm import (
    AdaptationConfig,
    EpidemicConfig,
    IslandSpec,
    TerminationCriteria,
)
from islandde.models.problem import Bounds, Problem
from islandde.services.engine import GenerationSettings, evolve_generation, evolve_slot, run
from islandde.services.population import Evaluator, init_population
from islandde.services.problems import sphere

from tests.conftest import make_population


def _reference_generation(population, problem, config, rng, fixed_strategy):
    """Replay each slot's random tape through the textbook DE formulas."""
    xs = population.positions
    fitness = population.fitness
    n, d = xs.shape
    lower, upper = problem.bounds.lower_array, problem.bounds.upper_array
    best = xs[int(np.argmin(fitness))]
    pool = config.strategy_pool
    survivors = []
    for i in range(n):
        g = rng.generator(StreamPurpose.SLOT, population.generation, i)
        target = population[i]

        p = g.random(6 if config.adapt_strategy else 4)
        scale, cr = target.scale_factor, target.crossover_prob
        s = target.strategy if config.adapt_strategy else fixed_strategy
        if p[1] < config.tau:
            scale = config.f_min + p[0] * (config.f_max - config.f_min)
        if p[3] < config.tau:
            cr = config.cr_min + p[2] * (config.cr_max - config.cr_min)
        if config.adapt_strategy and p[5] < config.tau:
            s = pool[min(int(p[4] * len(pool)), len(pool) - 1)]

        others = [k for k in range(n) if k != i]
        r = g.choice(np.array(others), 4 if s == 4 else 3, replace=False)
        if s == 1:
            v = xs[r[0]] + scale * (xs[r[1]] - xs[r[2]])
        elif s == 2:
            v = best + scale * (xs[r[0]] - xs[r[1]])
        elif s == 3:
            v = xs[i] + scale * (xs[r[2]] - xs[i]) + scale * (xs[r[0]] - xs[r[1]])
        else:
            v = best + scale * (xs[r[0]] - xs[r[1]]) + scale * (xs[r[2]] - xs[r[3]])

        j_r = g.integers(d)
        u = g.random(d)
        trial = np.array([v[j] if (u[j] <= cr or j == j_r) else xs[i, j] for j in range(d)])
        trial = np.minimum(np.maximum(trial, lower), upper)

        f_trial = problem.objective(trial)
        if f_trial <= fitness[i]:
            survivors.append((trial, f_trial, (scale, cr, s)))
        else:
            kept = (target.scale_factor, target.crossover_prob, target.strategy)
            survivors.append((xs[i], fitness[i], kept))
    return survivors


@pytest.mark.parametrize("strategy", [1, 2, 3, 4, "adaptive"])
def test_generation_matches_reference(rastrigin5, strategy):
    spec = IslandSpec(strategy=strategy, population_size=8)
    config = spec.effective_adaptation()
    rng = RandomSource(seed=2024)
    population = init_population(
        rastrigin5, 8, rng, adaptation=config, fixed_strategy=spec.fixed_strategy
    )
    settings = GenerationSettings(
        config, rastrigin5.bounds, Evaluator(rastrigin5), fixed_strategy=spec.fixed_strategy
    )

    engine = evolve_generation(population, settings, rng, eps=0.0)
    reference = _reference_generation(population, rastrigin5, config, rng, spec.fixed_strategy)

    assert engine.generation == 1
    for member, (x, f, params) in zip(engine.members, reference, strict=True):
        np.testing.assert_array_equal(member.x, x)
        assert member.fitness == f
        assert (member.scale_factor, member.crossover_prob, member.strategy) == params


def test_identical_members_stay_put(sphere_problem, rng):
    population = make_population([[1.0, -2.0, 0.5]] * 6, sphere_problem)
    evaluator = Evaluator(sphere_problem)
    settings = GenerationSettings(AdaptationConfig(), sphere_problem.bounds, evaluator)

    nxt = evolve_generation(population, settings, rng, eps=0.0)

    np.testing.assert_array_equal(nxt.positions, population.positions)
    assert evaluator.count == 6


def test_slot_order_does_not_matter(rastrigin5, rng):
    population = init_population(rastrigin5, 10, rng)
    settings = GenerationSettings(AdaptationConfig(), rastrigin5.bounds, Evaluator(rastrigin5))
    x_best = population.positions[int(np.argmin(population.fitness))]

    forward = evolve_generation(population, settings, rng, eps=0.0)
    backward = {
        i: evolve_slot(population, i, settings, rng, 0.0, x_best) for i in reversed(range(10))
    }
    for i, member in enumerate(forward.members):
        np.testing.assert_array_equal(member.x, backward[i].x)


def test_worker_count_does_not_matter(rastrigin5, rng):
    population = init_population(rastrigin5, 16, rng)
    settings = GenerationSettings(
        AdaptationConfig(adapt_strategy=True), rastrigin5.bounds, Evaluator(rastrigin5)
    )
    inline = evolve_generation(population, settings, rng, eps=0.0)
    with WorkerPool(4) as pool:
        threaded = evolve_generation(population, settings, rng, eps=0.0, pool=pool)
    np.testing.assert_array_equal(inline.positions, threaded.positions)


def test_losing_trial_discards_adapted_parameters(sphere_problem, rng):
    # Donors coincide, so every trial copies (4, 4, 4) into at least one component
    population = make_population([[0.0, 0.0, 0.0]] + [[4.0, 4.0, 4.0]] * 5, sphere_problem)
    settings = GenerationSettings(
        AdaptationConfig(tau=1.0), sphere_problem.bounds, Evaluator(sphere_problem)
    )
    survivor = evolve_slot(population, 0, settings, rng, 0.0, population.positions[0])
    assert survivor is population[0]
    assert survivor.scale_factor == 0.5
    assert survivor.crossover_prob == 0.5


def test_best_fitness_never_increases(rng, settings):
    problem = Problem(name="sphere", bounds=Bounds.uniform(-5.0, 5.0, 2), objective=sphere)
    spec = IslandSpec(strategy=1, population_size=8, epidemic=EpidemicConfig(enabled=False))
    result = run(problem, spec, TerminationCriteria(max_generations=50), rng, settings=settings)
    trace = result.history.best_f_trace()
    assert len(trace) == 51
    assert all(b <= a for a, b in zip(trace, trace[1:], strict=False))


def test_trials_use_the_fixed_strategy(rastrigin5, rng):
    # Members arrive with strategy 1 but the population runs strategy 4
    population = init_population(rastrigin5, 8, rng, fixed_strategy=1)
    config = AdaptationConfig()
    settings = GenerationSettings(
        config, rastrigin5.bounds, Evaluator(rastrigin5), fixed_strategy=4
    )

    engine = evolve_generation(population, settings, rng, eps=0.0)
    reference = _reference_generation(population, rastrigin5, config, rng, 4)

    for member, target, (x, _, params) in zip(
        engine.members, population.members, reference, strict=True
    ):
        np.testing.assert_array_equal(member.x, x)
        assert member.strategy == params[2]
        if member is not target:
            assert member.strategy == 4
