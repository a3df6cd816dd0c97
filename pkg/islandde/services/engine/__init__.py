"""DE engine: operators, generation step, islands and the run loop."""

from islandde.services.engine.generation import (
    GenerationSettings,
    evolve_generation,
    evolve_slot,
)
from islandde.services.engine.island import Island
from islandde.services.engine.loop import BarrierHook, BarrierOutcome, EvolutionLoop
from islandde.services.engine.operators import (
    clip_bounds,
    crossover,
    draw_donor_indices,
    mutate,
    select,
)
from islandde.services.engine.runner import run

__all__ = [
    "BarrierHook",
    "BarrierOutcome",
    "EvolutionLoop",
    "GenerationSettings",
    "Island",
    "clip_bounds",
    "crossover",
    "draw_donor_indices",
    "evolve_generation",
    "evolve_slot",
    "mutate",
    "run",
    "select",
]
