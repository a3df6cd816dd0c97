"""Data models for the package."""

from islandde.models.algorithm import (
    AdaptationConfig,
    EpidemicConfig,
    EpsilonSchedule,
    IslandSpec,
    MigrationConfig,
    PruningConfig,
    TerminationCriteria,
    TopologyConfig,
)
from islandde.models.experiment import ArchipelagoConfig, ExperimentConfig, ProblemSelector
from islandde.models.history import (
    GenerationRecord,
    PruningEventRecord,
    RunHistory,
    RunResult,
    SummaryRow,
)
from islandde.models.individual import Individual, Population
from islandde.models.problem import BenchmarkSpec, Bounds, EqualityConstraint, Problem

__all__ = [
    # Algorithm
    "AdaptationConfig",
    "EpidemicConfig",
    "EpsilonSchedule",
    "IslandSpec",
    "MigrationConfig",
    "PruningConfig",
    "TerminationCriteria",
    "TopologyConfig",
    # Experiment
    "ArchipelagoConfig",
    "ExperimentConfig",
    "ProblemSelector",
    # History
    "GenerationRecord",
    "PruningEventRecord",
    "RunHistory",
    "RunResult",
    "SummaryRow",
    # Individual
    "Individual",
    "Population",
    # Problem
    "BenchmarkSpec",
    "Bounds",
    "EqualityConstraint",
    "Problem",
]
