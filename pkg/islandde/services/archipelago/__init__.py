"""Island model: topologies, migration and lockstep evolution."""

from islandde.services.archipelago.archipelago import evolve_archipelago, island_specs
from islandde.services.archipelago.migration import Migrator, migrant_count, migrate
from islandde.services.archipelago.topology import (
    RING_STRATEGY_ORDER,
    Phase,
    Topology,
    neighbors,
)

__all__ = [
    "RING_STRATEGY_ORDER",
    "Migrator",
    "Phase",
    "Topology",
    "evolve_archipelago",
    "island_specs",
    "migrant_count",
    "migrate",
    "neighbors",
]
