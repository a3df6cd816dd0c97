"""Island-model evolution: lockstep islands with migration and optional pruning."""

from collections.abc import Sequence

from pydantic import ValidationError

from islandde.config import Settings
from islandde.core.exceptions import ConfigurationError
from islandde.core.random import RandomSource
from islandde.core.workers import INLINE, WorkerPool
from islandde.models.algorithm import (
    EpsilonSchedule,
    IslandSpec,
    MigrationConfig,
    PruningConfig,
    StrategyChoice,
    TerminationCriteria,
)
from islandde.models.history import RunResult
from islandde.models.problem import Problem
from islandde.services.archipelago.migration import Migrator
from islandde.services.archipelago.topology import Topology
from islandde.services.engine.island import Island
from islandde.services.engine.loop import BarrierHook, EvolutionLoop
from islandde.services.population.evaluator import Evaluator
from islandde.services.pruning import PruningHook, pruning_generations


def island_specs(
    spec: IslandSpec,
    topology: Topology,
    strategies: Sequence[StrategyChoice] | None = None,
) -> list[IslandSpec]:
    """One spec per island.

    A single island keeps ``spec`` as is. Several islands take ``strategies`` when
    given, else the topology's by-ring assignment.

    Raises:
        ConfigurationError: If the strategy count is wrong, or an island's population
            is too small for its strategy
    """
    if strategies is not None:
        if len(strategies) != topology.n_islands:
            raise ConfigurationError(
                "archipelago.strategies",
                f"{len(strategies)} strategies for {topology.n_islands} islands",
            )
    elif topology.n_islands == 1:
        return [spec]
    else:
        strategies = topology.default_strategies()

    specs: list[IslandSpec] = []
    for k, strategy in enumerate(strategies):
        try:
            specs.append(spec.with_strategy(strategy))
        except ValidationError as e:
            raise ConfigurationError(
                "archipelago.strategies", f"island {k}: {e.errors()[0]['msg']}"
            ) from e
    return specs


def evolve_archipelago(
    problem: Problem,
    specs: Sequence[IslandSpec],
    topology: Topology,
    migration: MigrationConfig,
    termination: TerminationCriteria,
    rng: RandomSource,
    *,
    epsilon: EpsilonSchedule | None = None,
    pruning: PruningConfig | None = None,
    pool: WorkerPool = INLINE,
    settings: Settings | None = None,
) -> RunResult:
    """Evolve all islands in lockstep under one global epsilon schedule.

    Island k draws from stream k of ``rng``'s seed and the orchestrator from stream
    N_i. Migration runs at the barrier before pruning.

    Args:
        problem: Problem to minimise
        specs: One spec per island, see :func:`island_specs`
        topology: Migration graph
        migration: Interval, edge probability and migrant fraction
        termination: Stop criteria over the whole archipelago
        rng: Seed source; island k uses stream k
        epsilon: Global constraint tolerance schedule
        pruning: Optional pruning over the islands as partial runs
        pool: Workers across islands, or across slots of a single island
        settings: Process settings; the cached ones when omitted

    Returns:
        Run result with one best-fitness column per island

    Raises:
        ConfigurationError: If ``specs`` does not match the island count, or pruning
            does not run one partial run per island
    """
    n_islands = topology.n_islands
    if len(specs) != n_islands:
        raise ConfigurationError(
            "archipelago.strategies", f"{len(specs)} island specs for {n_islands} islands"
        )

    evaluator = Evaluator(problem)
    island_pool, outer_pool = (pool, INLINE) if n_islands == 1 else (INLINE, pool)
    islands = [
        Island(k, problem, spec, rng.substream(k), evaluator, pool=island_pool)
        for k, spec in enumerate(specs)
    ]
    sizes = [island.population_size for island in islands]

    hooks: list[BarrierHook] = []
    if n_islands > 1:
        hooks.append(Migrator(topology, migration, rng.substream(n_islands), sizes))
    if pruning is not None and pruning.enabled:
        if pruning.n_runs != n_islands:
            raise ConfigurationError(
                "pruning.n_runs",
                f"{pruning.n_runs} partial runs for {n_islands} islands",
            )
        hooks.append(
            PruningHook(
                pruning,
                pruning_generations(termination, sum(sizes)),
                n_islands,
                min(sizes),
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
