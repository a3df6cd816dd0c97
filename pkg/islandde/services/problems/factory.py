"""Factory for built-in benchmark problems."""

from collections.abc import Callable

from islandde.core.exceptions import ConfigurationError
from islandde.models.experiment import ProblemSelector
from islandde.models.problem import BenchmarkSpec, Bounds, Problem
from islandde.services.problems.benchmarks import (
    EQUALITY_DEMO_TOLERANCE,
    constrained_quadratic,
    equality_demo,
    rastrigin,
    rosenbrock,
    sphere,
)


class _ScalableBenchmark:
    """Benchmark defined for any dimension over a symmetric box."""

    def __init__(
        self,
        name: str,
        objective: Callable[..., float],
        half_width: float,
        default_dimension: int,
        optimum_coordinate: float,
        min_dimension: int = 1,
    ):
        self.name = name
        self.objective = objective
        self.half_width = half_width
        self.default_dimension = default_dimension
        self.optimum_coordinate = optimum_coordinate
        self.min_dimension = min_dimension

    def build(self, dimension: int, bounds: Bounds | None) -> BenchmarkSpec:
        box = bounds or Bounds.uniform(-self.half_width, self.half_width, dimension)
        problem = Problem(name=self.name, bounds=box, objective=self.objective)
        return BenchmarkSpec(
            name=self.name,
            dimension=dimension,
            bounds=box,
            known_optimum_f=0.0,
            known_optimizer=(self.optimum_coordinate,) * dimension,
            problem=problem,
        )


class ProblemFactory:
    """Creates benchmark problems by name."""

    SCALABLE: dict[str, _ScalableBenchmark] = {
        "sphere": _ScalableBenchmark("sphere", sphere, 100.0, 10, 0.0),
        "rosenbrock": _ScalableBenchmark("rosenbrock", rosenbrock, 50.0, 100, 1.0, 2),
        "rastrigin": _ScalableBenchmark("rastrigin", rastrigin, 5.12, 30, 0.0),
    }
    FIXED = ("constrained_quadratic", "equality_demo")

    @classmethod
    def available(cls) -> list[str]:
        return sorted([*cls.SCALABLE, *cls.FIXED])

    def get_benchmark(self, selector: ProblemSelector) -> BenchmarkSpec:
        """Build the benchmark named by ``selector``.

        Raises:
            ConfigurationError: If the name is unknown or the dimension is invalid
        """
        bounds_override = None
        if selector.lower is not None and selector.upper is not None:
            dimension_hint = selector.dimension or self._default_dimension(selector.name)
            bounds_override = Bounds.uniform(selector.lower, selector.upper, dimension_hint)

        if selector.name in self.SCALABLE:
            benchmark = self.SCALABLE[selector.name]
            dimension = selector.dimension or benchmark.default_dimension
            if dimension < benchmark.min_dimension:
                raise ConfigurationError(
                    "problem.dimension",
                    f"{selector.name} needs at least {benchmark.min_dimension} dimensions",
                )
            return benchmark.build(dimension, bounds_override)

        if selector.name in self.FIXED:
            if selector.dimension not in (None, 2):
                raise ConfigurationError(
                    "problem.dimension", f"{selector.name} is defined for dimension 2 only"
                )
            if bounds_override is not None:
                raise ConfigurationError(
                    "problem.lower", f"{selector.name} has a fixed box and cannot be overridden"
                )
            return self._fixed(selector.name)

        raise ConfigurationError(
            "problem.name",
            f"Unknown problem '{selector.name}'; available: {', '.join(self.available())}",
        )

    def get_problem(self, selector: ProblemSelector) -> Problem:
        return self.get_benchmark(selector).problem

    def _default_dimension(self, name: str) -> int:
        if name in self.SCALABLE:
            return self.SCALABLE[name].default_dimension
        return 2

    @staticmethod
    def _fixed(name: str) -> BenchmarkSpec:
        if name == "constrained_quadratic":
            problem = constrained_quadratic()
            return BenchmarkSpec(
                name=name,
                dimension=2,
                bounds=problem.bounds,
                known_optimum_f=0.5,
                known_optimizer=(0.5, 0.5),
                problem=problem,
            )
        # The tolerance band shifts the optimum to x1 + x2 = 2 - delta
        problem = equality_demo()
        coordinate = 1.0 - EQUALITY_DEMO_TOLERANCE / 2.0
        return BenchmarkSpec(
            name=name,
            dimension=2,
            bounds=problem.bounds,
            known_optimum_f=2.0 * coordinate**2,
            known_optimizer=(coordinate, coordinate),
            problem=problem,
        )
