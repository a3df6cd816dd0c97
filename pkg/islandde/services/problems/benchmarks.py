"""Analytic benchmark problems with known optima."""

import numpy as np

from islandde.models.problem import Bounds, EqualityConstraint, FloatArray, Problem
from islandde.services.population.evaluator import convert_equality


def sphere(x: FloatArray) -> float:
    """Sum of squares."""
    x = np.asarray(x, dtype=np.float64)
    return float(np.dot(x, x))


def rosenbrock(x: FloatArray) -> float:
    """Chained Rosenbrock function; minimum 0 at (1, ..., 1)."""
    x = np.asarray(x, dtype=np.float64)
    if x.size < 2:
        raise ValueError(f"Rosenbrock needs at least 2 dimensions, got {x.size}")
    head, tail = x[:-1], x[1:]
    return float(np.sum(100.0 * (tail - head**2) ** 2 + (1.0 - head) ** 2))


def rastrigin(x: FloatArray) -> float:
    """Rastrigin function; minimum 0 at the origin."""
    x = np.asarray(x, dtype=np.float64)
    return float(10.0 * x.size + np.sum(x**2 - 10.0 * np.cos(2.0 * np.pi * x)))


def _quadratic_2d(x: FloatArray) -> float:
    return float(x[0] ** 2 + x[1] ** 2)


def _half_plane(x: FloatArray) -> float:
    # 1 - x1 - x2 <= 0
    return float(1.0 - x[0] - x[1])


def _line_sum(x: FloatArray) -> float:
    return float(x[0] + x[1])


EQUALITY_DEMO_TOLERANCE = 1e-3


def constrained_quadratic() -> Problem:
    """Minimize x1^2 + x2^2 on [-10, 10]^2 subject to x1 + x2 >= 1.

    Optimum at (0.5, 0.5) with f = 0.5 on the active constraint.
    """
    return Problem(
        name="constrained_quadratic",
        bounds=Bounds.uniform(-10.0, 10.0, 2),
        objective=_quadratic_2d,
        constraints=(_half_plane,),
    )


def equality_demo(tolerance: float = EQUALITY_DEMO_TOLERANCE) -> Problem:
    """Minimize x1^2 + x2^2 on [-5, 5]^2 subject to x1 + x2 = 2 within tolerance."""
    equality = EqualityConstraint(evaluator=_line_sum, target=2.0, tolerance=tolerance)
    return Problem(
        name="equality_demo",
        bounds=Bounds.uniform(-5.0, 5.0, 2),
        objective=_quadratic_2d,
        constraints=(convert_equality(equality),),
    )
