"""Pruning event schedule and box shrinking."""

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from islandde.core.counting import fraction_count
from islandde.core.exceptions import ConfigurationError, InternalError
from islandde.core.logging import logger
from islandde.models.algorithm import PruningConfig
from islandde.models.problem import Bounds, FloatArray


@dataclass(frozen=True)
class PruningEvent:
    index: int
    generation: int
    rho: float


def pruning_schedule(config: PruningConfig, n_generations: int) -> list[PruningEvent]:
    """Event generations: the first at floor(frac * N_G), then equally spaced.

    Raises:
        ConfigurationError: If the events do not fit in ``n_generations``
    """
    if n_generations <= 0:
        raise ConfigurationError(
            "termination.max_generations", f"Pruning needs N_G > 0, got {n_generations}"
        )
    if config.first_event_frac >= 1.0:
        raise ConfigurationError(
            "pruning.first_event_frac",
            f"{config.first_event_frac} leaves no generations for pruning events",
        )
    first = fraction_count(config.first_event_frac, n_generations)
    if first < 1:
        raise ConfigurationError(
            "pruning.first_event_frac",
            f"First event falls at generation {first}, before any evolution",
        )
    spacing = (n_generations - first) // config.n_events
    if spacing < 1:
        raise ConfigurationError(
            "pruning.n_events",
            f"{config.n_events} events do not fit between generation {first} and {n_generations}",
        )
    return [
        PruningEvent(index=i, generation=first + i * spacing, rho=config.rho(i))
        for i in range(config.n_events)
    ]


def cluster_size(rho: float, n_runs: int) -> int:
    """Number of run bests kept in the cluster."""
    return fraction_count(rho, n_runs)


def prune_bounds(
    best_set: Sequence[FloatArray],
    rho: float,
    original_bounds: Bounds,
    current_bounds: Bounds,
) -> Bounds:
    """Relaxed hull of the cluster, intersected with ``current_bounds``.

    ``best_set`` is sorted best first; its length is N_r. The relaxation on each
    side is 0.5 (1 - rho) times the original width.

    Raises:
        InternalError: If the cluster is empty
    """
    if not best_set:
        raise InternalError("Pruning needs at least one run best")
    count = cluster_size(rho, len(best_set))
    if count < 1:
        raise InternalError(f"rho={rho} keeps no solution out of {len(best_set)} run bests")

    cluster = np.vstack(best_set[:count])
    relaxation = 0.5 * (1.0 - rho) * original_bounds.width
    lower = np.maximum(cluster.min(axis=0) - relaxation, current_bounds.lower_array)
    upper = np.minimum(cluster.max(axis=0) + relaxation, current_bounds.upper_array)

    if np.any(lower >= upper):
        logger.warning(
            f"Pruned box is degenerate in dimensions "
            f"{np.flatnonzero(lower >= upper).tolist()}; keeping the current bounds"
        )
        return current_bounds
    return Bounds.from_arrays(lower, upper)
