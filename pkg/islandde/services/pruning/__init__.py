"""Pruning-by-clustering of the search box."""

from islandde.services.pruning.orchestrator import (
    PruningHook,
    pruning_generations,
    run_with_pruning,
)
from islandde.services.pruning.schedule import (
    PruningEvent,
    cluster_size,
    prune_bounds,
    pruning_schedule,
)

__all__ = [
    "PruningEvent",
    "PruningHook",
    "cluster_size",
    "prune_bounds",
    "pruning_generations",
    "pruning_schedule",
    "run_with_pruning",
]
