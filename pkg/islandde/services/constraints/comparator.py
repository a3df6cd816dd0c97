"""Epsilon-level lexicographic comparison.

An individual is epsilon-feasible when psi_max <= eps. Epsilon-feasible members
rank by f, ahead of the rest, which rank by psi_max.
"""

from collections.abc import Sequence

from islandde.models.individual import Individual

SortKey = tuple[int, float]


def sort_key(individual: Individual, eps: float) -> SortKey:
    """Key whose ascending order is best-first at level ``eps``."""
    psi_max = individual.violation
    if psi_max <= eps:
        return (0, individual.fitness)
    return (1, psi_max)


def is_better(a: Individual, b: Individual, eps: float) -> bool:
    """Strictly better at level ``eps``."""
    return sort_key(a, eps) < sort_key(b, eps)


def compare_lexicographic(challenger: Individual, incumbent: Individual, eps: float) -> Individual:
    """Winner of a pairwise comparison; ties go to ``challenger``.

    Members within ``eps`` of feasibility compare on f alone, others on psi_max first.

    Args:
        challenger: Usually the trial
        incumbent: Usually the target
        eps: Tolerance on psi_max

    Returns:
        ``challenger`` unless ``incumbent`` is strictly better
    """
    if sort_key(challenger, eps) <= sort_key(incumbent, eps):
        return challenger
    return incumbent


def rank(members: Sequence[Individual], eps: float) -> list[int]:
    """Indices ordered best-first; equal keys keep index order."""
    return sorted(range(len(members)), key=lambda i: (sort_key(members[i], eps), i))


def best_index(members: Sequence[Individual], eps: float) -> int:
    """Lowest index among the best members."""
    return min(range(len(members)), key=lambda i: (sort_key(members[i], eps), i))


def best_of(members: Sequence[Individual], eps: float) -> Individual:
    return members[best_index(members, eps)]


def worst_indices(members: Sequence[Individual], eps: float, count: int) -> list[int]:
    """The ``count`` worst indices, worst first."""
    if count <= 0:
        return []
    return rank(members, eps)[::-1][:count]
