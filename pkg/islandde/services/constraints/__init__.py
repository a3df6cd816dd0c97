"""Constraint handling: epsilon schedule and lexicographic comparator."""

from islandde.services.constraints.comparator import (
    best_index,
    best_of,
    compare_lexicographic,
    is_better,
    rank,
    sort_key,
    worst_indices,
)
from islandde.services.constraints.epsilon import (
    epsilon_level,
    generation_horizon,
    resolve_schedule,
)

__all__ = [
    "best_index",
    "best_of",
    "compare_lexicographic",
    "epsilon_level",
    "generation_horizon",
    "is_better",
    "rank",
    "resolve_schedule",
    "sort_key",
    "worst_indices",
]
