"""Problem definition and search-space geometry."""

from collections.abc import Callable, Sequence
from functools import cached_property
from typing import Any

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

FloatArray = NDArray[np.float64]
Evaluator = Callable[[FloatArray], float]


def _readonly(values: Sequence[float]) -> FloatArray:
    array = np.asarray(values, dtype=np.float64)
    array.flags.writeable = False
    return array


class Bounds(BaseModel):
    """Axis-aligned box [lower, upper] of the decision space."""

    model_config = ConfigDict(frozen=True)

    lower: tuple[float, ...]
    upper: tuple[float, ...]

    @field_validator("lower", "upper")
    @classmethod
    def validate_finite(cls, v: tuple[float, ...]) -> tuple[float, ...]:
        """Reject empty and non-finite bound vectors."""
        if len(v) == 0:
            raise ValueError("Bounds need at least one dimension")
        if not all(np.isfinite(v)):
            raise ValueError("Bounds must be finite")
        return v

    @model_validator(mode="after")
    def validate_box(self) -> "Bounds":
        """Ensure the box has matching lengths and positive width everywhere."""
        if len(self.lower) != len(self.upper):
            raise ValueError(
                f"lower has {len(self.lower)} entries but upper has {len(self.upper)}"
            )
        for j, (lo, hi) in enumerate(zip(self.lower, self.upper, strict=True)):
            if not lo < hi:
                raise ValueError(f"Dimension {j} has zero or negative width: [{lo}, {hi}]")
        return self

    @classmethod
    def uniform(cls, lower: float, upper: float, dimension: int) -> "Bounds":
        """Build the box [lower, upper]^dimension."""
        return cls(lower=(lower,) * dimension, upper=(upper,) * dimension)

    @classmethod
    def from_arrays(cls, lower: FloatArray, upper: FloatArray) -> "Bounds":
        return cls(
            lower=tuple(float(v) for v in lower),
            upper=tuple(float(v) for v in upper),
        )

    @property
    def dimension(self) -> int:
        return len(self.lower)

    @cached_property
    def lower_array(self) -> FloatArray:
        return _readonly(self.lower)

    @cached_property
    def upper_array(self) -> FloatArray:
        return _readonly(self.upper)

    @cached_property
    def width(self) -> FloatArray:
        return _readonly(np.subtract(self.upper, self.lower))

    def contains(self, x: FloatArray) -> bool:
        """Check x_L <= x <= x_U component-wise."""
        return bool(np.all(x >= self.lower_array) and np.all(x <= self.upper_array))

    def is_subset_of(self, other: "Bounds") -> bool:
        return bool(
            np.all(self.lower_array >= other.lower_array)
            and np.all(self.upper_array <= other.upper_array)
        )


class Problem(BaseModel):
    """Objective plus K >= 0 inequality constraints over a bound box.

    A constraint value <= 0 means satisfied. Evaluators must be pure and safe
    to call from several threads at once.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    bounds: Bounds
    objective: Callable[[Any], float]
    constraints: tuple[Callable[[Any], float], ...] = ()

    @property
    def dimension(self) -> int:
        return self.bounds.dimension

    @property
    def is_constrained(self) -> bool:
        return len(self.constraints) > 0


class EqualityConstraint(BaseModel):
    """Equality Phi(x) = target, satisfied within tolerance."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    evaluator: Callable[[Any], float]
    target: float = 0.0
    tolerance: float = 1e-4


class BenchmarkSpec(BaseModel):
    """A built-in problem with a known optimum."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    dimension: int = Field(ge=1)
    bounds: Bounds
    known_optimum_f: float
    known_optimizer: tuple[float, ...] | None = None  # None means "any"
    problem: Problem

    @model_validator(mode="after")
    def validate_dimension(self) -> "BenchmarkSpec":
        if self.bounds.dimension != self.dimension:
            raise ValueError("Benchmark bounds do not match its dimension")
        if self.known_optimizer is not None and len(self.known_optimizer) != self.dimension:
            raise ValueError("Known optimizer does not match the benchmark dimension")
        return self
