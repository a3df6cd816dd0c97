"""Core utilities for the package."""

from islandde.core.exceptions import (
    ConfigurationError,
    ExperimentIOError,
    HistoryFormatError,
    InternalError,
    IslandDEError,
    UndefinedDiversityError,
)
from islandde.core.random import RandomSource, StreamPurpose
from islandde.core.workers import WorkerPool

__all__ = [
    "ConfigurationError",
    "ExperimentIOError",
    "HistoryFormatError",
    "InternalError",
    "IslandDEError",
    "RandomSource",
    "StreamPurpose",
    "UndefinedDiversityError",
    "WorkerPool",
]
