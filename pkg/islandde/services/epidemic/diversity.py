"""Normalised population diversity."""

import numpy as np
from scipy.spatial.distance import pdist

from islandde.core.exceptions import UndefinedDiversityError
from islandde.models.individual import Population
from islandde.models.problem import Bounds


def diversity_score(population: Population, bounds: Bounds) -> float:
    """Mean pairwise Euclidean distance of bound-normalised positions, in [0, sqrt(D)].

    Raises:
        UndefinedDiversityError: If the population has fewer than two members
    """
    if population.size < 2:
        raise UndefinedDiversityError(population.size)
    normalized = (population.positions - bounds.lower_array) / bounds.width
    return float(np.mean(pdist(normalized, metric="euclidean")))
