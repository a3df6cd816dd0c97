"""Statistical benchmark experiments; run with --runslow."""

import numpy as np
import pytest
from scipy.stats import ranksums

from islandde.core.random import RandomSource
from islandde.core.workers import WorkerPool
from islandde.models.algorithm import (
    EpidemicConfig,
    EpsilonSchedule,
    IslandSpec,
    MigrationConfig,
    PruningConfig,
    TerminationCriteria,
)
from islandde.models.experiment import ProblemSelector
from islandde.services.archipelago import Topology, evolve_archipelago, island_specs
from islandde.services.engine import run
from islandde.services.problems import ProblemFactory
from islandde.services.pruning import run_with_pruning

pytestmark = pytest.mark.slow

SEEDS = range(1, 21)
DEFAULT_EPIDEMIC = EpidemicConfig(d_tol=1e-3, rho_elite=0.1, rho_ill=1.0, cooldown=1000)


def _problem(name, dimension):
    return ProblemFactory().get_problem(ProblemSelector(name=name, dimension=dimension))


def _final_bests(problem, spec, generations):
    termination = TerminationCriteria(max_generations=generations)
    return np.array(
        [run(problem, spec, termination, RandomSource(seed)).best_f for seed in SEEDS]
    )


def _epidemic_pair(problem, generations):
    with_epidemic = IslandSpec(population_size=64, epidemic=DEFAULT_EPIDEMIC)
    without = IslandSpec(population_size=64, epidemic=EpidemicConfig(enabled=False))
    return (
        _final_bests(problem, with_epidemic, generations),
        _final_bests(problem, without, generations),
    )


def test_epidemic_improves_rastrigin():
    with_epidemic, without = _epidemic_pair(_problem("rastrigin", 30), 5000)
    assert with_epidemic.mean() < without.mean()
    assert ranksums(with_epidemic, without, alternative="less").pvalue < 0.05


def test_epidemic_does_not_hurt_rosenbrock():
    with_epidemic, without = _epidemic_pair(_problem("rosenbrock", 100), 5000)
    assert with_epidemic.mean() <= without.mean()


def test_constrained_quadratic_converges():
    problem = _problem("constrained_quadratic", None)
    spec = IslandSpec(strategy=1, population_size=40, epidemic=EpidemicConfig(enabled=False))
    termination = TerminationCriteria(max_generations=500)
    schedule = EpsilonSchedule(eps_inf=1e-8)
    for seed in SEEDS:
        result = run(problem, spec, termination, RandomSource(seed), epsilon=schedule)
        assert result.best_psi_max <= 1e-6
        assert result.best_f == pytest.approx(0.5, abs=1e-3)
        levels = [r.epsilon for r in result.history.records]
        assert all(b <= a for a, b in zip(levels, levels[1:], strict=False))
        assert result.history.final.best_psi_max <= schedule.eps_inf


def test_pruning_helps_rastrigin():
    problem = _problem("rastrigin", 10)
    spec = IslandSpec(population_size=50)
    termination = TerminationCriteria(max_generations=2000)
    wins = 0
    for repetition in range(10):
        rng = RandomSource(100 + repetition)
        pruned = run_with_pruning(
            problem, spec, PruningConfig(enabled=True, n_runs=16), termination, rng
        )
        plain = run_with_pruning(problem, spec, PruningConfig(n_runs=16), termination, rng)
        wins += pruned.best_f <= plain.best_f
    assert wins >= 8


def _archipelago_bests(n_islands, population_size, generations, workers=1):
    problem = _problem("rastrigin", 30)
    spec = IslandSpec(population_size=population_size, epidemic=EpidemicConfig(enabled=False))
    migration = MigrationConfig(interval=100, probability=0.5, fraction=0.05)
    termination = TerminationCriteria(max_generations=generations)
    results = []
    with WorkerPool(workers) as pool:
        for seed in SEEDS:
            topology = Topology("radial", n_islands)
            results.append(
                evolve_archipelago(
                    problem,
                    island_specs(spec, topology),
                    topology,
                    migration,
                    termination,
                    RandomSource(seed),
                    pool=pool,
                )
            )
    return results


def test_more_islands_at_equal_budget():
    # 256 * 10000 = 8 * 32 * 10000 evaluations, about 2.56e6 each
    single = np.array([r.best_f for r in _archipelago_bests(1, 256, 10_000)])
    eight = np.array([r.best_f for r in _archipelago_bests(8, 32, 10_000)])
    assert eight.mean() <= single.mean()
    assert eight.std() <= single.std()


def test_worker_count_gives_identical_histories():
    serial = _archipelago_bests(8, 32, 300, workers=1)
    threaded = _archipelago_bests(8, 32, 300, workers=8)
    for a, b in zip(serial, threaded, strict=True):
        assert a.history == b.history
