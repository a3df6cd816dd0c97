"""Shared fixtures."""

from collections.abc import Sequence

import numpy as np
import pytest

from islandde.config import Settings
from islandde.core.random import RandomSource
from islandde.models.individual import Individual, Population
from islandde.models.problem import Bounds, Problem
from islandde.services.problems import constrained_quadratic, rastrigin, sphere


def pytest_addoption(parser: pytest.Parser) -> None:
    parser.addoption(
        "--runslow", action="store_true", default=False, help="run statistical experiments"
    )


def pytest_collection_modifyitems(config: pytest.Config, items: list[pytest.Item]) -> None:
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


def make_individual(
    x: Sequence[float],
    f: float | None = None,
    psi_max: float | None = None,
    scale_factor: float = 0.5,
    crossover_prob: float = 0.5,
    strategy: int = 1,
) -> Individual:
    """Individual at x, evaluated when f is given (psi_max defaults to feasible)."""
    individual = Individual.create(x, scale_factor, crossover_prob, strategy)
    if f is None:
        return individual
    return individual.with_evaluation(f, -np.inf if psi_max is None else psi_max)


def make_population(
    positions: Sequence[Sequence[float]], problem: Problem, generation: int = 0
) -> Population:
    """Population evaluated on ``problem`` outside any FES counter."""
    members = []
    for x in positions:
        point = np.asarray(x, dtype=np.float64)
        f = problem.objective(point)
        psi = max(g(point) for g in problem.constraints) if problem.constraints else -np.inf
        members.append(make_individual(point, f, psi))
    return Population.of(members, generation=generation)


@pytest.fixture
def sphere_problem() -> Problem:
    return Problem(name="sphere", bounds=Bounds.uniform(-5.0, 5.0, 3), objective=sphere)


@pytest.fixture
def rastrigin5() -> Problem:
    return Problem(name="rastrigin", bounds=Bounds.uniform(-5.12, 5.12, 5), objective=rastrigin)


@pytest.fixture
def quadratic_problem() -> Problem:
    return constrained_quadratic()


@pytest.fixture
def rng() -> RandomSource:
    return RandomSource(seed=42)


@pytest.fixture
def settings() -> Settings:
    return Settings(debug_checks=True, log_level="WARNING")
