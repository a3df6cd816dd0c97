"""Population initialisation over a bound box."""

from typing import Literal

import numpy as np
from scipy.stats import qmc

from islandde.core.exceptions import ConfigurationError
from islandde.core.random import RandomSource, StreamPurpose
from islandde.core.workers import INLINE, WorkerPool
from islandde.models.algorithm import MIN_POPULATION, AdaptationConfig
from islandde.models.individual import Individual, Population
from islandde.models.problem import Bounds, FloatArray, Problem
from islandde.services.adaptation import draw_initial
from islandde.services.population.evaluator import Evaluator

InitMethod = Literal["uniform", "latin_hypercube"]


class PopulationInitializer:
    """Samples and evaluates fresh individuals for one island."""

    def __init__(
        self,
        problem: Problem,
        adaptation: AdaptationConfig,
        evaluator: Evaluator,
        fixed_strategy: int = 1,
        method: InitMethod = "uniform",
        pool: WorkerPool = INLINE,
    ):
        """Initialize the sampler.

        Args:
            problem: Problem whose objective scores new members
            adaptation: Ranges for the initial F, Cr and strategy draws
            evaluator: Evaluator charged for every sample
            fixed_strategy: Strategy given when the strategy does not adapt
            method: Uniform sampling or a Latin hypercube
            pool: Workers for the evaluations
        """
        self.problem = problem
        self.adaptation = adaptation
        self.evaluator = evaluator
        self.fixed_strategy = fixed_strategy
        self.method = method
        self.pool = pool

    def _positions(
        self, count: int, bounds: Bounds, generator: np.random.Generator
    ) -> list[FloatArray]:
        lower, upper = bounds.lower_array, bounds.upper_array
        if self.method == "latin_hypercube":
            sampler = qmc.LatinHypercube(d=bounds.dimension, seed=generator)
            scaled = qmc.scale(sampler.random(count), lower, upper)
            return [np.clip(row, lower, upper) for row in scaled]
        # x = x_L + p (x_U - x_L), clipped against rounding past x_U
        return [
            np.clip(lower + generator.random(bounds.dimension) * bounds.width, lower, upper)
            for _ in range(count)
        ]

    def sample(
        self, count: int, bounds: Bounds, generator: np.random.Generator
    ) -> list[Individual]:
        """Draw ``count`` evaluated individuals inside ``bounds``.

        Positions are drawn first, then each member's control parameters.
        """
        positions = self._positions(count, bounds, generator)
        members = []
        for x in positions:
            params = draw_initial(self.adaptation, generator, self.fixed_strategy)
            members.append(
                Individual.create(x, params.scale_factor, params.crossover_prob, params.strategy)
            )
        return self.pool.map(self.evaluator.evaluate, members)


def init_population(
    problem: Problem,
    size: int,
    rng: RandomSource,
    *,
    adaptation: AdaptationConfig | None = None,
    fixed_strategy: int = 1,
    bounds: Bounds | None = None,
    evaluator: Evaluator | None = None,
    method: InitMethod = "uniform",
    pool: WorkerPool = INLINE,
) -> Population:
    """Build and evaluate generation 0.

    Raises:
        ConfigurationError: If ``size`` is below the mutation-strategy minimum
    """
    if size < MIN_POPULATION:
        raise ConfigurationError(
            "island.population_size",
            f"population size {size} is below the minimum of {MIN_POPULATION} "
            f"needed by the mutation strategies",
        )
    initializer = PopulationInitializer(
        problem,
        adaptation or AdaptationConfig(),
        evaluator or Evaluator(problem),
        fixed_strategy=fixed_strategy,
        method=method,
        pool=pool,
    )
    generator = rng.generator(StreamPurpose.INIT)
    members = initializer.sample(size, bounds or problem.bounds, generator)
    return Population.of(members, generation=0)
