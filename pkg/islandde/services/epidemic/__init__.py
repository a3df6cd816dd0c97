"""Diversity monitoring and epidemic restarts."""

from islandde.services.epidemic.diversity import diversity_score
from islandde.services.epidemic.epidemic import (
    EpidemicOutcome,
    epidemic_sizes,
    maybe_epidemic,
    should_fire,
)

__all__ = [
    "EpidemicOutcome",
    "diversity_score",
    "epidemic_sizes",
    "maybe_epidemic",
    "should_fire",
]
