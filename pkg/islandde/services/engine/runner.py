"""Single-population DE run."""

from islandde.config import Settings
from islandde.core.random import RandomSource
from islandde.core.workers import INLINE, WorkerPool
from islandde.models.algorithm import EpsilonSchedule, IslandSpec, TerminationCriteria
from islandde.models.history import RunResult
from islandde.models.problem import Problem
from islandde.services.engine.island import Island
from islandde.services.engine.loop import EvolutionLoop
from islandde.services.population.evaluator import Evaluator


def run(
    problem: Problem,
    spec: IslandSpec,
    termination: TerminationCriteria,
    rng: RandomSource,
    *,
    epsilon: EpsilonSchedule | None = None,
    pool: WorkerPool = INLINE,
    settings: Settings | None = None,
) -> RunResult:
    """Evolve one population until ``termination`` fires.

    The pool parallelises the slots of each generation.

    Args:
        problem: Problem to minimise
        spec: Strategy, population size and add-on settings
        termination: Stop criteria; the first to fire ends the run
        rng: Stream of the population
        epsilon: Constraint tolerance schedule; resolved from the run when unset
        pool: Workers for the slots
        settings: Process settings; the cached ones when omitted

    Returns:
        Best individual, per-generation history and FES count

    Raises:
        ConfigurationError: If the population is too small for its strategies
    """
    evaluator = Evaluator(problem)
    island = Island(0, problem, spec, rng, evaluator, pool=pool)
    loop = EvolutionLoop(
        [island],
        termination,
        epsilon or EpsilonSchedule(),
        evaluator,
        settings=settings,
    )
    return loop.run()
