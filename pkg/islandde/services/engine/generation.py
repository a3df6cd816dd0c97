"""One synchronous DE generation."""

from dataclasses import dataclass

from islandde.core.random import RandomSource, StreamPurpose
from islandde.core.workers import INLINE, WorkerPool
from islandde.models.algorithm import AdaptationConfig
from islandde.models.individual import Individual, Population
from islandde.models.problem import Bounds, FloatArray
from islandde.services.adaptation import adapted_parameters
from islandde.services.constraints import best_index
from islandde.services.engine.operators import clip_bounds, crossover, mutate, select
from islandde.services.population.evaluator import Evaluator


@dataclass(frozen=True)
class GenerationSettings:
    """What a generation needs besides the population and the stream."""

    adaptation: AdaptationConfig
    bounds: Bounds
    evaluator: Evaluator
    # Strategy every trial uses when the strategy does not self-adapt
    fixed_strategy: int | None = None


def evolve_slot(
    population: Population,
    index: int,
    settings: GenerationSettings,
    rng: RandomSource,
    eps: float,
    x_best: FloatArray,
) -> Individual:
    """Adapt, mutate, cross, clip, evaluate and select for slot ``index``.

    Reads only generation-G members; draws come from the (G, index) sub-stream.
    """
    generator = rng.generator(StreamPurpose.SLOT, population.generation, index)
    target = population[index]

    params = adapted_parameters(
        target, settings.adaptation, generator, fixed_strategy=settings.fixed_strategy
    )
    donor = mutate(
        population, index, params.strategy, params.scale_factor, generator, x_best=x_best
    )
    trial_x = clip_bounds(
        crossover(target.x, donor, params.crossover_prob, generator), settings.bounds
    )
    trial = settings.evaluator.evaluate(
        Individual.create(trial_x, params.scale_factor, params.crossover_prob, params.strategy)
    )
    return select(target, trial, eps)


def evolve_generation(
    population: Population,
    settings: GenerationSettings,
    rng: RandomSource,
    eps: float,
    pool: WorkerPool = INLINE,
) -> Population:
    """Population G+1; exactly N_p evaluations.

    Args:
        population: Evaluated generation G
        settings: Adaptation, box, evaluator and the population's strategy
        rng: Stream of the population; slot i of generation G uses key (G, i)
        eps: Constraint tolerance for this generation
        pool: Workers over slots; the result does not depend on it

    Returns:
        Survivors in slot order
    """
    x_best = population.positions[best_index(population.members, eps)]
    survivors = pool.map(
        lambda i: evolve_slot(population, i, settings, rng, eps, x_best),
        range(population.size),
    )
    return population.next_generation(survivors)
