"""Experiment configuration model (the YAML config file)."""

from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from islandde.models.algorithm import (
    EpsilonSchedule,
    IslandSpec,
    MigrationConfig,
    PruningConfig,
    StrategyChoice,
    TerminationCriteria,
    TopologyConfig,
)


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid")


class ProblemSelector(_Section):
    """Built-in problem chosen by name."""

    name: str
    dimension: int | None = Field(default=None, ge=1)
    # Optional box override, applied to every dimension
    lower: float | None = None
    upper: float | None = None

    @model_validator(mode="after")
    def validate_box(self) -> "ProblemSelector":
        if (self.lower is None) != (self.upper is None):
            raise ValueError("lower and upper must be given together")
        if self.lower is not None and self.upper is not None and not self.lower < self.upper:
            raise ValueError(f"lower ({self.lower}) must be below upper ({self.upper})")
        return self


class ArchipelagoConfig(_Section):
    """Island arrangement, migration and per-island strategies."""

    topology: TopologyConfig = Field(default_factory=TopologyConfig)
    migration: MigrationConfig = Field(default_factory=MigrationConfig)
    # One entry per island; omitted means the by-ring default assignment
    strategies: list[StrategyChoice] | None = None

    @model_validator(mode="after")
    def validate_strategies(self) -> "ArchipelagoConfig":
        if self.strategies is not None and len(self.strategies) != self.topology.n_islands:
            raise ValueError(
                f"strategies has {len(self.strategies)} entries for "
                f"{self.topology.n_islands} islands"
            )
        return self


class ExperimentConfig(_Section):
    """Everything needed to reproduce a batch of runs."""

    id: str = "experiment"
    problem: ProblemSelector
    island: IslandSpec = Field(default_factory=IslandSpec)
    archipelago: ArchipelagoConfig = Field(default_factory=ArchipelagoConfig)
    pruning: PruningConfig = Field(default_factory=PruningConfig)
    epsilon: EpsilonSchedule = Field(default_factory=EpsilonSchedule)
    termination: TerminationCriteria
    seeds: list[int] = Field(default_factory=lambda: [1], min_length=1)
    output_dir: Path | None = None

    @field_validator("seeds")
    @classmethod
    def validate_seeds(cls, v: list[int]) -> list[int]:
        negative = [s for s in v if s < 0]
        if negative:
            raise ValueError(f"Seeds must be non-negative: {negative}")
        if len(set(v)) != len(v):
            raise ValueError("Seeds contain duplicates")
        return v

    @field_validator("id")
    @classmethod
    def validate_id(cls, v: str) -> str:
        if not v or any(c in v for c in "/\\"):
            raise ValueError("id must be a non-empty name without path separators")
        return v

    @model_validator(mode="after")
    def validate_pruning_islands(self) -> "ExperimentConfig":
        n_islands = self.archipelago.topology.n_islands
        if self.pruning.enabled and n_islands > 1 and self.pruning.n_runs != n_islands:
            raise ValueError(
                f"pruning.n_runs ({self.pruning.n_runs}) must equal the number of islands "
                f"({n_islands}) when partial runs are archipelago islands"
            )
        return self
