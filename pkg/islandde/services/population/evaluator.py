"""Objective and constraint evaluation with FES accounting."""

import math
import threading
from collections.abc import Callable
from typing import Any

import numpy as np

from islandde.core.exceptions import ConfigurationError
from islandde.core.logging import logger
from islandde.models.individual import Individual
from islandde.models.problem import EqualityConstraint, FloatArray, Problem

# Marks a point as feasible by construction on unconstrained problems
UNCONSTRAINED_PSI = -math.inf
FAILED_EVALUATION = (math.inf, math.inf)


def convert_equality(equality: EqualityConstraint) -> Callable[[Any], float]:
    """Turn Phi(x) = C into the inequality |Phi(x) - C| - delta <= 0.

    Raises:
        ConfigurationError: If the tolerance is not positive
    """
    if not equality.tolerance > 0.0:
        raise ConfigurationError(
            "constraint.tolerance", f"Equality tolerance must be positive, got {equality.tolerance}"
        )
    phi = equality.evaluator
    target = equality.target
    tolerance = equality.tolerance

    def inequality(x: FloatArray) -> float:
        return abs(float(phi(x)) - target) - tolerance

    return inequality


def _objective_and_violation(problem: Problem, x: FloatArray) -> tuple[float, float]:
    try:
        f = float(np.asarray(problem.objective(x), dtype=np.float64))
        if problem.is_constrained:
            values = np.array(
                [float(np.asarray(g(x), dtype=np.float64)) for g in problem.constraints],
                dtype=np.float64,
            )
            psi_max = float(values.max())
            finite = math.isfinite(f) and bool(np.all(np.isfinite(values)))
        else:
            psi_max = UNCONSTRAINED_PSI
            finite = math.isfinite(f)
    except Exception as e:
        logger.debug(f"Evaluation of {problem.name} failed at {x.tolist()}: {e}")
        return FAILED_EVALUATION

    if not finite:
        logger.debug(f"Non-finite evaluation of {problem.name} at {x.tolist()}")
        return FAILED_EVALUATION
    return f, psi_max


class Evaluator:
    """Evaluates individuals of one problem and counts evaluations.

    The counter is shared by every worker of a run.
    """

    def __init__(self, problem: Problem):
        """Initialize the evaluator.

        Args:
            problem: Objective and constraints to evaluate
        """
        self.problem = problem
        self._count = 0
        self._lock = threading.Lock()

    @property
    def count(self) -> int:
        with self._lock:
            return self._count

    def evaluate(self, individual: Individual) -> Individual:
        """Return ``individual`` with f and psi_max set; adds one FES."""
        f, psi_max = _objective_and_violation(self.problem, individual.x)
        with self._lock:
            self._count += 1
        return individual.with_evaluation(f, psi_max)

    __call__ = evaluate


def evaluate(problem: Problem, individual: Individual) -> Individual:
    """Evaluate a single individual outside any run."""
    return Evaluator(problem).evaluate(individual)
