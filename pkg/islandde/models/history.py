"""Run history and result models."""

from pydantic import BaseModel, ConfigDict, Field

from islandde.models.individual import Individual
from islandde.models.problem import Bounds

NO_PRUNING_EVENT = -1


class GenerationRecord(BaseModel):
    """One row of the per-generation trace."""

    generation: int = Field(ge=0)
    fes: int = Field(ge=0)
    best_f: float
    best_psi_max: float
    epsilon: float
    diversity: float
    epidemic_fired: int = 0  # islands that restarted this generation
    pruning_event: int = NO_PRUNING_EVENT
    island_best_f: list[float] = Field(default_factory=list)


class PruningEventRecord(BaseModel):
    """A pruning event and the box it produced."""

    index: int
    generation: int
    rho: float
    n_elites: int
    bounds: Bounds


class RunHistory(BaseModel):
    """Ordered per-generation records of one run."""

    records: list[GenerationRecord] = Field(default_factory=list)

    def append(self, record: GenerationRecord) -> None:
        self.records.append(record)

    def __len__(self) -> int:
        return len(self.records)

    @property
    def final(self) -> GenerationRecord:
        return self.records[-1]

    @property
    def n_islands(self) -> int:
        return len(self.records[0].island_best_f) if self.records else 0

    def best_f_trace(self) -> list[float]:
        return [r.best_f for r in self.records]


class RunResult(BaseModel):
    """Outcome of a run: best individual, trace and bookkeeping."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    best: Individual
    history: RunHistory
    total_fes: int
    generations: int
    epidemics: int = 0
    pruning_events: list[PruningEventRecord] = Field(default_factory=list)
    final_bounds: Bounds

    @property
    def best_f(self) -> float:
        return self.best.fitness

    @property
    def best_psi_max(self) -> float:
        return self.best.violation

    @property
    def feasible(self) -> bool:
        """True when the reported best satisfies every constraint exactly."""
        return self.best.violation <= 0.0


class SummaryRow(BaseModel):
    """Cross-seed statistics of final best fitness."""

    config_id: str
    n_islands: int
    population_size: int
    n_generations: int
    mean: float
    std: float
    best: float
