"""Island arrangements and migration tides."""

import sys
from typing import Literal

if sys.version_info >= (3, 11):
    from enum import StrEnum
else:
    from enum import Enum

    class StrEnum(str, Enum):
        def __str__(self) -> str:
            return str.__str__(self)

        def __format__(self, format_spec: str) -> str:
            return str.__format__(str(self), format_spec)

from islandde.core.exceptions import ConfigurationError
from islandde.models.algorithm import TopologyConfig

TopologyKind = Literal["radial", "ring", "fully_connected"]

# Strategies by ring, inner to outer: explorative first, exploitative last
RING_STRATEGY_ORDER: tuple[int, ...] = (1, 3, 2, 4)


class Phase(StrEnum):
    FORWARD = "forward"
    BACKWARD = "backward"


class Topology:
    """Directed migration graph over N_i islands.

    Radial islands are indexed ring-major: index = ring * spokes + spoke, ring 0
    innermost. Forward tides flow outward along a spoke, backward tides inward.
    """

    def __init__(self, kind: TopologyKind, n_islands: int, rings: int | None = None):
        if n_islands < 1:
            raise ConfigurationError("archipelago.topology.n_islands", "Need at least one island")
        self.kind = kind
        self.n_islands = n_islands
        self.rings = rings if rings is not None else 1
        if kind == "radial":
            if rings is None:
                self.rings = 4 if n_islands % 4 == 0 else n_islands
            if n_islands % self.rings:
                raise ConfigurationError(
                    "archipelago.topology.rings",
                    f"{n_islands} islands cannot be split into {self.rings} rings",
                )
        self.phase = Phase.FORWARD

    @classmethod
    def from_config(cls, config: TopologyConfig) -> "Topology":
        return cls(config.kind, config.n_islands, config.resolved_rings)

    @property
    def spokes(self) -> int:
        return self.n_islands // self.rings

    def coordinates(self, index: int) -> tuple[int, int]:
        """(ring, spoke) of a radial island."""
        self._check(index)
        return divmod(index, self.spokes)

    def index_of(self, ring: int, spoke: int) -> int:
        return ring * self.spokes + spoke

    def neighbors(self, index: int, phase: Phase | None = None) -> list[int]:
        """Destinations of island ``index`` at ``phase`` (default: current phase)."""
        self._check(index)
        phase = phase or self.phase
        if self.kind == "radial":
            ring, spoke = self.coordinates(index)
            target = ring + 1 if phase == Phase.FORWARD else ring - 1
            if 0 <= target < self.rings:
                return [self.index_of(target, spoke)]
            return []
        if self.kind == "ring":
            successor = (index + 1) % self.n_islands
            return [] if successor == index else [successor]
        return [k for k in range(self.n_islands) if k != index]

    def edges(self, phase: Phase | None = None) -> list[tuple[int, int]]:
        """Directed (source, destination) pairs in ascending source order."""
        return [
            (source, destination)
            for source in range(self.n_islands)
            for destination in self.neighbors(source, phase)
        ]

    def flip(self) -> Phase:
        """Reverse the radial tide; other kinds have no phase."""
        if self.kind == "radial":
            self.phase = Phase.BACKWARD if self.phase == Phase.FORWARD else Phase.FORWARD
        return self.phase

    def default_strategies(self) -> list[int]:
        """Mutation strategy of each island when none is configured."""
        order = RING_STRATEGY_ORDER
        if self.kind == "radial":
            return [
                order[self.coordinates(k)[0] * len(order) // self.rings]
                for k in range(self.n_islands)
            ]
        return [order[k % len(order)] for k in range(self.n_islands)]

    def _check(self, index: int) -> None:
        if not 0 <= index < self.n_islands:
            raise IndexError(f"Island index {index} outside [0, {self.n_islands})")

    def __repr__(self) -> str:
        return (
            f"Topology(kind={self.kind!r}, n_islands={self.n_islands}, "
            f"rings={self.rings}, phase={self.phase.value})"
        )


def neighbors(topology: Topology, index: int, phase: Phase | None = None) -> list[int]:
    return topology.neighbors(index, phase)
