"""Individuals and populations.

Both are immutable values: an operator that changes a decision vector produces a new,
unevaluated Individual, so a cached evaluation can never go stale.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, replace
from functools import cached_property

import numpy as np

from islandde.core.exceptions import InternalError
from islandde.models.problem import Bounds, FloatArray


@dataclass(frozen=True, slots=True, eq=False)
class Individual:
    """Decision vector with private control parameters and cached evaluation."""

    x: FloatArray
    scale_factor: float
    crossover_prob: float
    strategy: int = 1
    f: float | None = None
    psi_max: float | None = None  # <= 0 means feasible

    @classmethod
    def create(
        cls,
        x: Sequence[float] | FloatArray,
        scale_factor: float,
        crossover_prob: float,
        strategy: int = 1,
    ) -> "Individual":
        """Build an unevaluated individual owning a read-only copy of x."""
        position = np.array(x, dtype=np.float64)
        position.flags.writeable = False
        return cls(
            x=position,
            scale_factor=float(scale_factor),
            crossover_prob=float(crossover_prob),
            strategy=int(strategy),
        )

    @property
    def evaluated(self) -> bool:
        return self.f is not None and self.psi_max is not None

    @property
    def fitness(self) -> float:
        if self.f is None:
            raise InternalError("Individual has not been evaluated")
        return self.f

    @property
    def violation(self) -> float:
        if self.psi_max is None:
            raise InternalError("Individual has not been evaluated")
        return self.psi_max

    def with_evaluation(self, f: float, psi_max: float) -> "Individual":
        """Attach an evaluation; each position is evaluated exactly once."""
        if self.evaluated:
            raise InternalError("Individual is already evaluated")
        return replace(self, f=float(f), psi_max=float(psi_max))

    def with_position(self, x: Sequence[float] | FloatArray) -> "Individual":
        """New unevaluated individual at x carrying the same control parameters."""
        return Individual.create(x, self.scale_factor, self.crossover_prob, self.strategy)

    def with_parameters(
        self, scale_factor: float, crossover_prob: float, strategy: int
    ) -> "Individual":
        """Same position and evaluation, different control parameters."""
        return replace(
            self,
            scale_factor=float(scale_factor),
            crossover_prob=float(crossover_prob),
            strategy=int(strategy),
        )

    def copy(self) -> "Individual":
        """Deep copy, used when an individual crosses to another island."""
        position = self.x.copy()
        position.flags.writeable = False
        return replace(self, x=position)


@dataclass(frozen=True, eq=False)
class Population:
    """Fixed-size collection of individuals at generation G."""

    members: tuple[Individual, ...]
    generation: int = 0

    @classmethod
    def of(cls, members: Iterable[Individual], generation: int = 0) -> "Population":
        return cls(members=tuple(members), generation=generation)

    def __len__(self) -> int:
        return len(self.members)

    def __getitem__(self, index: int) -> Individual:
        return self.members[index]

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def evaluated(self) -> bool:
        return all(m.evaluated for m in self.members)

    @cached_property
    def positions(self) -> FloatArray:
        """Member positions stacked as an (N_p, D) read-only matrix."""
        matrix = np.vstack([m.x for m in self.members])
        matrix.flags.writeable = False
        return matrix

    @cached_property
    def fitness(self) -> FloatArray:
        return np.array([m.fitness for m in self.members], dtype=np.float64)

    @cached_property
    def violations(self) -> FloatArray:
        return np.array([m.violation for m in self.members], dtype=np.float64)

    def with_members(self, members: Iterable[Individual]) -> "Population":
        """Same generation, replaced members."""
        return Population(members=tuple(members), generation=self.generation)

    def next_generation(self, members: Iterable[Individual]) -> "Population":
        return Population(members=tuple(members), generation=self.generation + 1)

    def within(self, bounds: Bounds) -> bool:
        """Check every member lies inside bounds."""
        lower, upper = bounds.lower_array, bounds.upper_array
        positions = self.positions
        return bool(np.all(positions >= lower) and np.all(positions <= upper))
