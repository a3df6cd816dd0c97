"""Population creation and evaluation."""

from islandde.services.population.evaluator import Evaluator, convert_equality, evaluate
from islandde.services.population.initializer import PopulationInitializer, init_population

__all__ = [
    "Evaluator",
    "PopulationInitializer",
    "convert_equality",
    "evaluate",
    "init_population",
]
