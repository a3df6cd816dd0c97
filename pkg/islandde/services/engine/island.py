"""A single DE population with its own stream, box and add-on state."""

import math

from islandde.core.exceptions import ConfigurationError, InternalError
from islandde.core.logging import logger
from islandde.core.random import RandomSource, StreamPurpose
from islandde.core.workers import INLINE, WorkerPool
from islandde.models.algorithm import IslandSpec, required_population
from islandde.models.individual import Individual, Population
from islandde.models.problem import Bounds, Problem
from islandde.services.constraints import best_of, compare_lexicographic, rank, worst_indices
from islandde.services.engine.generation import GenerationSettings, evolve_generation
from islandde.services.epidemic import diversity_score, maybe_epidemic
from islandde.services.population.evaluator import Evaluator
from islandde.services.population.initializer import PopulationInitializer

# Champions are ranked with every constraint enforced exactly
FEASIBILITY_EPS = 0.0


class Island:
    """One island of an archipelago, or a partial run between pruning events."""

    def __init__(
        self,
        index: int,
        problem: Problem,
        spec: IslandSpec,
        rng: RandomSource,
        evaluator: Evaluator,
        bounds: Bounds | None = None,
        pool: WorkerPool = INLINE,
    ):
        """Bind an island to its problem, stream and evaluator.

        Args:
            index: Position in the archipelago; also the island's stream number
            problem: Problem being solved
            spec: Strategy, population size and add-on settings
            rng: Stream of this island
            evaluator: Shared FES-counting evaluator
            bounds: Starting box; the problem box when omitted
            pool: Workers for slots of this island

        Raises:
            ConfigurationError: If the population is too small for the strategies in use
        """
        self.index = index
        self.problem = problem
        self.spec = spec
        self.rng = rng
        self.evaluator = evaluator
        self.pool = pool
        self.original_bounds = problem.bounds
        self.bounds = bounds or problem.bounds
        self.adaptation = spec.effective_adaptation()
        self.population_size = spec.resolved_population_size(problem.dimension)
        needed = required_population(spec.strategies_in_use)
        if self.population_size < needed:
            raise ConfigurationError(
                "island.population_size",
                f"Island {index} has {self.population_size} members; mutation strategies "
                f"{sorted(spec.strategies_in_use)} need at least {needed}",
            )
        self.initializer = PopulationInitializer(
            problem,
            self.adaptation,
            evaluator,
            fixed_strategy=spec.fixed_strategy,
            method=spec.init_method,
            pool=pool,
        )

        self._population: Population | None = None
        self.champion: Individual | None = None
        self.diversity = math.nan
        self.last_epidemic_gen = 0
        self.epidemics = 0
        self.epidemic_fired = False

    @property
    def population(self) -> Population:
        if self._population is None:
            raise InternalError(f"Island {self.index} has not been initialised")
        return self._population

    @property
    def generation(self) -> int:
        return self.population.generation

    @property
    def containment_bounds(self) -> Bounds:
        """Box every member must lie in."""
        if self.spec.epidemic.reinit_domain == "original":
            return self.original_bounds
        return self.bounds

    def initialize(self) -> Population:
        """Sample and evaluate generation 0 over the current box."""
        generator = self.rng.generator(StreamPurpose.INIT)
        members = self.initializer.sample(self.population_size, self.bounds, generator)
        self._set_population(Population.of(members, generation=0))
        self.diversity = self._diversity()
        return self.population

    def step(self, eps: float) -> Population:
        """Advance one generation, then run the diversity check and epidemic."""
        settings = GenerationSettings(
            self.adaptation, self.bounds, self.evaluator, fixed_strategy=self.spec.fixed_strategy
        )
        population = evolve_generation(self.population, settings, self.rng, eps, self.pool)
        generation = population.generation
        self.epidemic_fired = False

        epidemic = self.spec.epidemic
        if generation % epidemic.stride == 0:
            outcome = maybe_epidemic(
                population,
                epidemic,
                generation,
                self.last_epidemic_gen,
                self.initializer,
                self.rng,
                eps=eps,
                bounds=self.bounds,
                original_bounds=self.original_bounds,
                diversity=self._diversity(population),
            )
            population = outcome.population
            self.diversity = outcome.diversity
            if outcome.fired:
                logger.debug(f"Island {self.index} restarted at generation {generation}")
                self.last_epidemic_gen = generation
                self.epidemics += 1
                self.epidemic_fired = True
        else:
            self.diversity = self._diversity(population)

        self._set_population(population)
        return population

    def best(self, eps: float) -> Individual:
        return best_of(self.population.members, eps)

    def elites(self, count: int, eps: float) -> list[Individual]:
        """Deep copies of the ``count`` best members, best first."""
        order = rank(self.population.members, eps)
        return [self.population[i].copy() for i in order[:count]]

    def receive(self, migrants: list[Individual], eps: float) -> None:
        """Replace the worst members with ``migrants``."""
        members = list(self.population.members)
        for slot, migrant in zip(
            worst_indices(members, eps, len(migrants)), migrants, strict=True
        ):
            members[slot] = self._adopt(migrant)
        self._set_population(self.population.with_members(members))

    def restart(self, bounds: Bounds, elites: list[Individual], event: int, eps: float) -> None:
        """Fresh population over ``bounds`` whose worst members give way to ``elites``."""
        self.bounds = bounds
        generator = self.rng.generator(StreamPurpose.RESTART, event)
        members = self.initializer.sample(self.population_size, bounds, generator)
        fresh = Population.of(members, generation=self.generation)
        for slot, elite in zip(
            worst_indices(fresh.members, eps, len(elites)), elites, strict=True
        ):
            members[slot] = self._adopt(elite.copy())
        self.champion = None
        self._set_population(fresh.with_members(members))
        self.diversity = self._diversity()

    def check_containment(self) -> None:
        """Raise if any member has left the box."""
        if not self.population.within(self.containment_bounds):
            raise InternalError(
                f"Island {self.index} has members outside its bounds at generation "
                f"{self.generation}"
            )

    def _adopt(self, newcomer: Individual) -> Individual:
        """Newcomer bound to this island's strategy unless the strategy self-adapts."""
        if self.adaptation.adapt_strategy or newcomer.strategy == self.spec.fixed_strategy:
            return newcomer
        return newcomer.with_parameters(
            newcomer.scale_factor, newcomer.crossover_prob, self.spec.fixed_strategy
        )

    def _diversity(self, population: Population | None = None) -> float:
        target = self.population if population is None else population
        return diversity_score(target, self.original_bounds)

    def _set_population(self, population: Population) -> None:
        self._population = population
        best = best_of(population.members, FEASIBILITY_EPS)
        if self.champion is None:
            self.champion = best
        else:
            self.champion = compare_lexicographic(self.champion, best, FEASIBILITY_EPS)
