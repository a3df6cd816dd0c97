"""Seedable, splittable random streams.

Every draw in a run comes from a generator derived from ``(seed, stream, purpose, *key)``,
so the sample sequence of a given slot, island and generation does not depend on how
many workers execute the run or in which order they pick up work.
"""

from enum import IntEnum

import numpy as np


class StreamPurpose(IntEnum):
    """Namespaces that keep the sub-streams of one island disjoint."""

    INIT = 0
    SLOT = 1
    EPIDEMIC = 2
    RESTART = 3
    MIGRATION = 4


class RandomSource:
    """One independent random stream: an island, or the orchestrator."""

    def __init__(self, seed: int, stream: int = 0):
        if seed < 0:
            raise ValueError(f"Seed must be non-negative, got {seed}")
        if stream < 0:
            raise ValueError(f"Stream id must be non-negative, got {stream}")
        self.seed = seed
        self.stream = stream

    def generator(self, purpose: StreamPurpose, *key: int) -> np.random.Generator:
        """Return a fresh generator for ``purpose`` indexed by ``key``.

        Identical arguments always yield identical sequences.
        """
        sequence = np.random.SeedSequence(
            self.seed,
            spawn_key=(self.stream, int(purpose), *(int(k) for k in key)),
        )
        return np.random.Generator(np.random.Philox(sequence))

    def substream(self, stream: int) -> "RandomSource":
        """Return the source for another stream id under the same seed."""
        return RandomSource(self.seed, stream)

    def __repr__(self) -> str:
        return f"RandomSource(seed={self.seed}, stream={self.stream})"
