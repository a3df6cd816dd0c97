"""Lockstep generation loop shared by single runs, archipelagos and pruning."""

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Protocol

import numpy as np

from islandde.config import Settings, get_settings
from islandde.core.logging import logger
from islandde.core.workers import INLINE, WorkerPool
from islandde.models.algorithm import EpsilonSchedule, TerminationCriteria
from islandde.models.history import (
    NO_PRUNING_EVENT,
    GenerationRecord,
    PruningEventRecord,
    RunHistory,
    RunResult,
)
from islandde.models.individual import Individual
from islandde.services.constraints import (
    best_of,
    epsilon_level,
    is_better,
    resolve_schedule,
)
from islandde.services.engine.island import FEASIBILITY_EPS, Island
from islandde.services.population.evaluator import Evaluator


@dataclass(frozen=True)
class BarrierOutcome:
    """What a barrier hook did at one generation."""

    pruning: PruningEventRecord | None = None


class BarrierHook(Protocol):
    """Work done on all islands between two generations."""

    def __call__(self, islands: Sequence[Island], generation: int, eps: float) -> BarrierOutcome:
        ...


class EvolutionLoop:
    """Advances islands in lockstep until a termination criterion fires.

    Islands are the parallel unit; every island has finished generation G before
    any hook runs.
    """

    def __init__(
        self,
        islands: Sequence[Island],
        termination: TerminationCriteria,
        epsilon: EpsilonSchedule,
        evaluator: Evaluator,
        hooks: Sequence[BarrierHook] = (),
        pool: WorkerPool = INLINE,
        settings: Settings | None = None,
    ):
        """Initialize the loop.

        Args:
            islands: Islands to advance, already bound to their streams
            termination: Stop criteria checked after every barrier
            epsilon: Constraint tolerance schedule, resolved at generation 0 if needed
            evaluator: Shared evaluator whose count is the run's FES
            hooks: Barrier behaviours, run in order after each generation
            pool: Workers across islands
            settings: Process settings; the cached ones when omitted
        """
        if not islands:
            raise ValueError("At least one island is required")
        self.islands = list(islands)
        self.termination = termination
        self.epsilon = epsilon
        self.evaluator = evaluator
        self.hooks = list(hooks)
        self.pool = pool
        self.settings = settings or get_settings()

        self.history = RunHistory()
        self.pruning_events: list[PruningEventRecord] = []
        self.champion: Individual | None = None
        self.stall = 0

    @property
    def total_population(self) -> int:
        return sum(island.population_size for island in self.islands)

    def run(self) -> RunResult:
        """Initialise, evolve until a criterion fires, and report the best."""
        problem = self.islands[0].problem
        logger.info(
            f"Run start: {problem.name} D={problem.dimension}, {len(self.islands)} island(s), "
            f"N_p={[i.population_size for i in self.islands]}"
        )
        self.pool.map(lambda island: island.initialize(), self.islands)
        initial_violations = np.concatenate(
            [island.population.violations for island in self.islands]
        )
        self.epsilon = resolve_schedule(
            self.epsilon,
            self.termination,
            self.total_population,
            initial_violations,
            problem.is_constrained,
        )
        generation = 0
        self._update_champion()
        self._record(generation, epsilon_level(self.epsilon, generation), NO_PRUNING_EVENT)

        while (reason := self._stop_reason(generation)) is None:
            generation += 1
            eps = epsilon_level(self.epsilon, generation)
            self.pool.map(lambda island: island.step(eps), self.islands)

            pruning_event = NO_PRUNING_EVENT
            for hook in self.hooks:
                outcome = hook(self.islands, generation, eps)
                if outcome.pruning is not None:
                    self.pruning_events.append(outcome.pruning)
                    pruning_event = outcome.pruning.index

            if self.settings.debug_checks:
                for island in self.islands:
                    island.check_containment()

            improved = self._update_champion()
            self.stall = 0 if improved else self.stall + 1
            self._record(generation, eps, pruning_event)

            if generation % self.settings.log_every == 0:
                final = self.history.final
                logger.debug(
                    f"Generation {generation}: best f={final.best_f:.6g} "
                    f"psi={final.best_psi_max:.3g} eps={eps:.3g} FES={final.fes}"
                )

        best = self.champion
        assert best is not None
        logger.info(
            f"Run stop ({reason}) at generation {generation}: best f={best.fitness:.10g}, "
            f"psi_max={best.violation:.3g}, FES={self.evaluator.count}"
        )
        return RunResult(
            best=best,
            history=self.history,
            total_fes=self.evaluator.count,
            generations=generation,
            epidemics=sum(island.epidemics for island in self.islands),
            pruning_events=self.pruning_events,
            final_bounds=self.islands[0].bounds,
        )

    def _stop_reason(self, generation: int) -> str | None:
        criteria = self.termination
        if criteria.max_generations is not None and generation >= criteria.max_generations:
            return "max_generations"
        if criteria.max_fes is not None and self.evaluator.count >= criteria.max_fes:
            return "max_fes"
        if (
            criteria.max_stall_generations is not None
            and self.stall >= criteria.max_stall_generations
        ):
            return "max_stall_generations"
        return None

    def _update_champion(self) -> bool:
        """Fold the island champions into the run's best; True on strict improvement."""
        improved = False
        for island in self.islands:
            candidate = island.champion
            assert candidate is not None
            if self.champion is None:
                self.champion = candidate
                improved = True
            elif is_better(candidate, self.champion, FEASIBILITY_EPS):
                self.champion = candidate
                improved = True
        return improved

    def _record(self, generation: int, eps: float, pruning_event: int) -> None:
        island_bests = [island.best(eps) for island in self.islands]
        best = best_of(island_bests, eps)
        self.history.append(
            GenerationRecord(
                generation=generation,
                fes=self.evaluator.count,
                best_f=best.fitness,
                best_psi_max=best.violation,
                epsilon=eps,
                diversity=float(np.mean([island.diversity for island in self.islands])),
                epidemic_fired=sum(island.epidemic_fired for island in self.islands),
                pruning_event=pruning_event,
                island_best_f=[b.fitness for b in island_bests],
            )
        )
