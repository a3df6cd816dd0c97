"""Synchronous elite migration between islands."""

from collections.abc import Sequence

from islandde.core.counting import fraction_count
from islandde.core.exceptions import ConfigurationError
from islandde.core.logging import logger
from islandde.core.random import RandomSource, StreamPurpose
from islandde.models.algorithm import MigrationConfig
from islandde.services.archipelago.topology import Topology
from islandde.services.engine.island import Island
from islandde.services.engine.loop import BarrierOutcome


def migrant_count(config: MigrationConfig, population_size: int) -> int:
    """N_b = max(1, floor(rho_mig * N_p))."""
    return max(1, fraction_count(config.fraction, population_size))


def migrate(
    islands: Sequence[Island],
    topology: Topology,
    config: MigrationConfig,
    event_index: int,
    rng: RandomSource,
    eps: float,
) -> int:
    """Copy each source's best members over its neighbours' worst, edge by edge.

    Emigrants are taken before any island changes. Each edge fires independently
    with probability ``config.probability``; a destination fed by several sources
    takes them in ascending source order. The radial tide flips afterwards.
    Returns the number of edges that fired.
    """
    edges = topology.edges()
    emigrants = {
        island.index: island.elites(migrant_count(config, island.population_size), eps)
        for island in islands
    }
    draws = rng.generator(StreamPurpose.MIGRATION, event_index).random(len(edges))

    fired = 0
    for (source, destination), u in zip(edges, draws, strict=True):
        if u < config.probability:
            islands[destination].receive([m.copy() for m in emigrants[source]], eps)
            fired += 1

    label = topology.phase.value if topology.kind == "radial" else topology.kind
    topology.flip()
    logger.info(f"Migration event {event_index} ({label}): {fired}/{len(edges)} edges fired")
    return fired


class Migrator:
    """Barrier hook running :func:`migrate` every ``config.interval`` generations."""

    def __init__(
        self,
        topology: Topology,
        config: MigrationConfig,
        rng: RandomSource,
        population_sizes: Sequence[int],
    ):
        """Initialize the migrator.

        Args:
            topology: Migration graph; its radial phase flips on every event
            config: Interval, edge probability and migrant fraction
            rng: Orchestration stream
            population_sizes: N_p of each island, used to size migrant batches

        Raises:
            ConfigurationError: If one batch would replace a whole population
        """
        smallest = min(population_sizes)
        largest_batch = max(migrant_count(config, n) for n in population_sizes)
        if topology.n_islands > 1 and largest_batch >= smallest:
            raise ConfigurationError(
                "archipelago.migration.fraction",
                f"{largest_batch} migrants would overwrite a whole population of {smallest}",
            )
        self.topology = topology
        self.config = config
        self.rng = rng
        self.events = 0

    def __call__(self, islands: Sequence[Island], generation: int, eps: float) -> BarrierOutcome:
        if generation % self.config.interval == 0:
            migrate(islands, self.topology, self.config, self.events, self.rng, eps)
            self.events += 1
        return BarrierOutcome()
