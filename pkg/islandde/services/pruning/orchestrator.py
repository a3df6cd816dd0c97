"""Partial runs, pruning events and elite re-seeding."""

from collections.abc import Sequence

from islandde.config import Settings
from islandde.core.exceptions import ConfigurationError
from islandde.core.logging import logger
from islandde.core.random import RandomSource
from islandde.core.workers import INLINE, WorkerPool
from islandde.models.algorithm import (
    EpsilonSchedule,
    IslandSpec,
    PruningConfig,
    TerminationCriteria,
)
from islandde.models.history import PruningEventRecord, RunResult
from islandde.models.individual import Individual
from islandde.models.problem import Bounds, Problem
from islandde.services.constraints import generation_horizon, rank
from islandde.services.engine.island import FEASIBILITY_EPS, Island
from islandde.services.engine.loop import BarrierHook, BarrierOutcome, EvolutionLoop
from islandde.services.population.evaluator import Evaluator
from islandde.services.pruning.schedule import cluster_size, prune_bounds, pruning_schedule


def pruning_generations(termination: TerminationCriteria, total_population: int) -> int:
    """N_G the schedule is laid out over.

    Raises:
        ConfigurationError: If the budget gives no generation count
    """
    horizon = generation_horizon(termination, total_population)
    if horizon is None:
        raise ConfigurationError(
            "termination", "Pruning needs max_generations or max_fes to place its events"
        )
    return horizon


class PruningHook:
    """Barrier hook that shrinks the box and re-seeds every partial run."""

    def __init__(
        self,
        config: PruningConfig,
        n_generations: int,
        n_runs: int,
        population_size: int,
        original_bounds: Bounds,
        pool: WorkerPool = INLINE,
    ):
        """Initialize the hook and check every scheduled event.

        Args:
            config: Pruning schedule and fractions
            n_generations: Generation horizon the schedule is laid over
            n_runs: Number of partial runs ranked at each event
            population_size: Members per run, the cap on re-seeded elites
            original_bounds: Box the first pruning starts from
            pool: Workers for the restarts

        Raises:
            ConfigurationError: If an event keeps no run bests or more elites than fit
        """
        self.config = config
        self.original_bounds = original_bounds
        self.pool = pool
        self.events = {e.generation: e for e in pruning_schedule(config, n_generations)}

        for event in self.events.values():
            count = cluster_size(event.rho, n_runs)
            if count < 1:
                raise ConfigurationError(
                    "pruning.delta_rho",
                    f"event {event.index} keeps floor({event.rho} * {n_runs}) = 0 run bests",
                )
            if count > population_size:
                raise ConfigurationError(
                    "pruning.rho0",
                    f"event {event.index} re-seeds {count} elites into populations of "
                    f"{population_size}",
                )
        logger.debug(f"Pruning scheduled at generations {self.generations}")

    @property
    def generations(self) -> list[int]:
        return sorted(self.events)

    def __call__(self, islands: Sequence[Island], generation: int, eps: float) -> BarrierOutcome:
        event = self.events.get(generation)
        if event is None:
            return BarrierOutcome()

        champions: list[Individual] = []
        for island in islands:
            assert island.champion is not None
            champions.append(island.champion)
        ordered = [champions[i] for i in rank(champions, FEASIBILITY_EPS)]

        current = islands[0].bounds
        pruned = prune_bounds([c.x for c in ordered], event.rho, self.original_bounds, current)
        elites = ordered[: cluster_size(event.rho, len(ordered))]
        self.pool.map(
            lambda island: island.restart(pruned, elites, event.index, eps), list(islands)
        )

        logger.info(
            f"Pruning event {event.index} at generation {generation}: rho={event.rho:g}, "
            f"{len(elites)} elites re-seeded, bounds lower={list(pruned.lower)} "
            f"upper={list(pruned.upper)}"
        )
        return BarrierOutcome(
            pruning=PruningEventRecord(
                index=event.index,
                generation=generation,
                rho=event.rho,
                n_elites=len(elites),
                bounds=pruned,
            )
        )


def run_with_pruning(
    problem: Problem,
    spec: IslandSpec,
    config: PruningConfig,
    termination: TerminationCriteria,
    rng: RandomSource,
    *,
    epsilon: EpsilonSchedule | None = None,
    pool: WorkerPool = INLINE,
    settings: Settings | None = None,
) -> RunResult:
    """N_r independent partial runs, pruned and re-seeded at each scheduled event.

    Run k draws from stream k of ``rng``'s seed. With pruning disabled the runs
    simply proceed side by side.

    Args:
        problem: Problem to minimise
        spec: Settings shared by every partial run
        config: Run count and pruning schedule
        termination: Stop criteria; also the horizon the events are laid over
        rng: Seed source; run k uses stream k
        epsilon: Global constraint tolerance schedule
        pool: Workers across runs, or across slots when there is one run
        settings: Process settings; the cached ones when omitted

    Returns:
        Run result whose best is the best over all runs and events
    """
    n_runs = config.n_runs
    evaluator = Evaluator(problem)
    # One run parallelises its slots, several runs are the parallel unit themselves
    island_pool, outer_pool = (pool, INLINE) if n_runs == 1 else (INLINE, pool)
    islands = [
        Island(k, problem, spec, rng.substream(k), evaluator, pool=island_pool)
        for k in range(n_runs)
    ]

    hooks: list[BarrierHook] = []
    if config.enabled:
        total_population = sum(island.population_size for island in islands)
        hooks.append(
            PruningHook(
                config,
                pruning_generations(termination, total_population),
                n_runs,
                min(island.population_size for island in islands),
                problem.bounds,
                pool=outer_pool,
            )
        )

    loop = EvolutionLoop(
        islands,
        termination,
        epsilon or EpsilonSchedule(),
        evaluator,
        hooks=hooks,
        pool=outer_pool,
        settings=settings,
    )
    return loop.run()
