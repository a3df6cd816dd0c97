"""Geometric epsilon schedule."""

import numpy as np

from islandde.core.exceptions import ConfigurationError
from islandde.models.algorithm import EpsilonSchedule, TerminationCriteria
from islandde.models.problem import FloatArray


def epsilon_level(schedule: EpsilonSchedule, generation: int) -> float:
    """Tolerance on psi_max at ``generation``.

    Constant eps0 up to n0, geometric decay to eps_inf at n_inf, constant after.

    Raises:
        ConfigurationError: If the schedule is unresolved or not positive
    """
    if schedule.eps0 is None or schedule.n0 is None or schedule.n_inf is None:
        raise ConfigurationError("epsilon", "Schedule must be resolved before use")
    eps0, eps_inf = schedule.eps0, schedule.eps_inf
    if eps0 <= 0.0 or eps_inf <= 0.0:
        raise ConfigurationError(
            "epsilon", f"eps0 ({eps0}) and eps_inf ({eps_inf}) must both be positive"
        )
    if generation < 0:
        raise ValueError(f"Generation must be non-negative, got {generation}")

    n0, n_inf = schedule.n0, schedule.n_inf
    if generation <= n0:
        return eps0
    if generation >= n_inf:
        return eps_inf
    exponent = (generation - n0) / (n_inf - n0)
    return float(eps0 * (eps_inf / eps0) ** exponent)


def generation_horizon(termination: TerminationCriteria, total_population: int) -> int | None:
    """Last generation the budget allows, if one is known."""
    if termination.max_generations is not None:
        return termination.max_generations
    if termination.max_fes is not None:
        return max(termination.max_fes // total_population - 1, 0)
    return None


def resolve_schedule(
    schedule: EpsilonSchedule,
    termination: TerminationCriteria,
    total_population: int,
    initial_violations: FloatArray,
    constrained: bool,
) -> EpsilonSchedule:
    """Fill unset schedule fields from the budget and the initial population.

    Unconstrained problems get a constant eps_inf schedule.

    Raises:
        ConfigurationError: If a constrained run has no generation horizon
    """
    if not constrained:
        return schedule.model_copy(update={"eps0": schedule.eps_inf, "n0": 0, "n_inf": 1})

    horizon = generation_horizon(termination, total_population)
    n_inf = schedule.n_inf
    if n_inf is None:
        if horizon is None:
            raise ConfigurationError(
                "epsilon.n_inf",
                "Set n_inf, max_generations or max_fes for a constrained problem",
            )
        n_inf = max(horizon, 1)

    n0 = schedule.n0
    if n0 is None:
        base = horizon if horizon is not None else n_inf
        n0 = min(base // 6, n_inf - 1)
    elif n0 >= n_inf:
        raise ConfigurationError("epsilon.n0", f"n0 ({n0}) must be below n_inf ({n_inf})")

    eps0 = schedule.eps0
    if eps0 is None:
        finite = initial_violations[np.isfinite(initial_violations)]
        eps0 = schedule.eps_inf
        if finite.size:
            eps0 = max(float(np.percentile(finite, schedule.eps0_percentile)), schedule.eps_inf)

    return schedule.model_copy(update={"eps0": eps0, "n0": n0, "n_inf": n_inf})
