"""Benchmark problems."""

from islandde.services.problems.benchmarks import (
    constrained_quadratic,
    equality_demo,
    rastrigin,
    rosenbrock,
    sphere,
)
from islandde.services.problems.factory import ProblemFactory

__all__ = [
    "ProblemFactory",
    "constrained_quadratic",
    "equality_demo",
    "rastrigin",
    "rosenbrock",
    "sphere",
]
