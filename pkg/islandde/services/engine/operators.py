"""DE variation and selection operators."""

import numpy as np
from numpy.typing import NDArray

from islandde.core.exceptions import ConfigurationError
from islandde.models.algorithm import DONOR_INDICES
from islandde.models.individual import Individual, Population
from islandde.models.problem import Bounds, FloatArray
from islandde.services.constraints import compare_lexicographic


def draw_donor_indices(
    population_size: int, target_index: int, strategy: int, generator: np.random.Generator
) -> NDArray[np.intp]:
    """Distinct indices r1..rk drawn from [0, N_p) without the target."""
    k = DONOR_INDICES[strategy]
    if population_size < k + 1:
        raise ConfigurationError(
            "island.population_size",
            f"strategy {strategy} needs {k} donors besides the target, "
            f"population has {population_size}",
        )
    candidates = np.delete(np.arange(population_size), target_index)
    return generator.choice(candidates, size=k, replace=False)


def mutate(
    population: Population,
    target_index: int,
    strategy: int,
    scale_factor: float,
    generator: np.random.Generator,
    x_best: FloatArray | None = None,
) -> FloatArray:
    """Donor vector for slot ``target_index``.

    1: x_r1 + F (x_r2 - x_r3)
    2: x_best + F (x_r1 - x_r2)
    3: x_i + F (x_r3 - x_i) + F (x_r1 - x_r2)
    4: x_best + F (x_r1 - x_r2) + F (x_r3 - x_r4)

    Args:
        population: Generation G
        target_index: Slot i; never drawn as a donor
        strategy: Mutation strategy 1 to 4
        scale_factor: F of the trial
        generator: Slot generator, consumed for the donor indices
        x_best: Best position of generation G; required by strategies 2 and 4

    Raises:
        ValueError: If a strategy needing ``x_best`` gets none
    """
    r = draw_donor_indices(population.size, target_index, strategy, generator)
    x = population.positions
    scale = scale_factor

    if strategy in (2, 4) and x_best is None:
        raise ValueError(f"Strategy {strategy} needs x_best")

    if strategy == 1:
        donor = x[r[0]] + scale * (x[r[1]] - x[r[2]])
    elif strategy == 2:
        assert x_best is not None
        donor = x_best + scale * (x[r[0]] - x[r[1]])
    elif strategy == 3:
        x_i = x[target_index]
        donor = x_i + scale * (x[r[2]] - x_i) + scale * (x[r[0]] - x[r[1]])
    elif strategy == 4:
        assert x_best is not None
        donor = x_best + scale * (x[r[0]] - x[r[1]]) + scale * (x[r[2]] - x[r[3]])
    else:
        raise ValueError(f"Unknown mutation strategy {strategy}")
    return np.asarray(donor, dtype=np.float64)


def crossover(
    target: FloatArray,
    donor: FloatArray,
    crossover_prob: float,
    generator: np.random.Generator,
) -> FloatArray:
    """Binomial crossover; component j_r always comes from the donor."""
    dimension = target.shape[0]
    j_r = generator.integers(dimension)
    mask = generator.random(dimension) <= crossover_prob
    mask[j_r] = True
    return np.where(mask, donor, target)


def clip_bounds(trial: FloatArray, bounds: Bounds) -> FloatArray:
    """Saturate each component at the violated bound."""
    return np.clip(trial, bounds.lower_array, bounds.upper_array)


def select(target: Individual, trial: Individual, eps: float) -> Individual:
    """Survivor of slot i; the trial wins ties."""
    return compare_lexicographic(trial, target, eps)
