"""Algorithm configuration models.

Defaults are the hyperparameter values recommended for each add-on: jDE ranges,
epidemic thresholds, pruning schedule, migration rates.
"""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

STRATEGIES: tuple[int, ...] = (1, 2, 3, 4)

# Distinct donor indices drawn by each mutation strategy (target excluded)
DONOR_INDICES: dict[int, int] = {1: 3, 2: 3, 3: 3, 4: 4}

MIN_POPULATION = 5
MIN_POPULATION_STRATEGY_4 = 6

StrategyChoice = int | Literal["adaptive"]


def required_population(strategies: set[int]) -> int:
    """Smallest N_p able to serve every strategy in ``strategies``."""
    return MIN_POPULATION_STRATEGY_4 if 4 in strategies else MIN_POPULATION


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid", validate_default=True)


class AdaptationConfig(_Section):
    """jDE self-adaptation of F, Cr and (optionally) the mutation strategy."""

    f_min: float = Field(default=0.1, ge=0.0)
    f_max: float = Field(default=1.0, gt=0.0)
    cr_min: float = Field(default=0.0, ge=0.0, le=1.0)
    cr_max: float = Field(default=1.0, ge=0.0, le=1.0)
    tau: float = Field(default=0.1, ge=0.0, le=1.0)
    adapt_strategy: bool = False
    strategy_pool: list[int] = Field(default_factory=lambda: list(STRATEGIES))

    @field_validator("strategy_pool")
    @classmethod
    def validate_pool(cls, v: list[int]) -> list[int]:
        unknown = [s for s in v if s not in STRATEGIES]
        if unknown:
            raise ValueError(f"Unknown mutation strategies {unknown}; valid: {STRATEGIES}")
        if len(set(v)) != len(v):
            raise ValueError("Strategy pool contains duplicates")
        return v

    @model_validator(mode="after")
    def validate_ranges(self) -> "AdaptationConfig":
        if not self.f_min < self.f_max:
            raise ValueError(f"f_min ({self.f_min}) must be below f_max ({self.f_max})")
        if not self.cr_min < self.cr_max:
            raise ValueError(f"cr_min ({self.cr_min}) must be below cr_max ({self.cr_max})")
        if self.adapt_strategy and not self.strategy_pool:
            raise ValueError("Strategy adaptation needs a non-empty strategy_pool")
        return self

    @property
    def delta_f(self) -> float:
        return self.f_max - self.f_min

    @property
    def delta_cr(self) -> float:
        return self.cr_max - self.cr_min


class EpidemicConfig(_Section):
    """Diversity-triggered partial restart."""

    enabled: bool = True
    d_tol: float = Field(default=1e-3, gt=0.0)
    rho_elite: float = Field(default=0.1, ge=0.0, le=1.0)
    rho_ill: float = Field(default=1.0, ge=0.0, le=1.0)
    cooldown: int = Field(default=1000, ge=1)
    # Diversity is checked every `stride` generations
    stride: int = Field(default=1, ge=1)
    reinit_domain: Literal["current", "original"] = "current"


class EpsilonSchedule(_Section):
    """Geometric decay of the constraint tolerance.

    Unset fields are resolved at run start: eps0 from the initial population's
    violations, n0 and n_inf from the generation budget.
    """

    eps0: float | None = Field(default=None, gt=0.0)
    eps_inf: float = Field(default=1e-8, gt=0.0)
    n0: int | None = Field(default=None, ge=0)
    n_inf: int | None = Field(default=None, ge=1)
    # Percentile of initial violations used for eps0 when it is unset
    eps0_percentile: float = Field(default=90.0, ge=0.0, le=100.0)

    @model_validator(mode="after")
    def validate_order(self) -> "EpsilonSchedule":
        if self.eps0 is not None and self.eps_inf > self.eps0:
            raise ValueError(f"eps_inf ({self.eps_inf}) must not exceed eps0 ({self.eps0})")
        if self.n0 is not None and self.n_inf is not None and not self.n0 < self.n_inf:
            raise ValueError(f"n0 ({self.n0}) must be below n_inf ({self.n_inf})")
        return self

    @property
    def resolved(self) -> bool:
        return self.eps0 is not None and self.n0 is not None and self.n_inf is not None


class PruningConfig(_Section):
    """Pruning-by-clustering over N_r partial runs."""

    enabled: bool = False
    n_runs: int = Field(default=1, ge=1)
    rho0: float = Field(default=0.3, gt=0.0, le=1.0)
    delta_rho: float = Field(default=0.1, ge=0.0, le=1.0)
    n_events: int = Field(default=3, ge=1)
    first_event_frac: float = Field(default=0.4, ge=0.0, le=1.0)

    @model_validator(mode="after")
    def validate_last_rho(self) -> "PruningConfig":
        last = self.rho0 - (self.n_events - 1) * self.delta_rho
        if last <= 1e-12:
            raise ValueError(
                f"rho0 - (n_events - 1) * delta_rho = {last:.6g} must stay positive"
            )
        return self

    def rho(self, event_index: int) -> float:
        """Fraction kept at the i-th event."""
        return round(self.rho0 - event_index * self.delta_rho, 12)


class TerminationCriteria(_Section):
    """Stop as soon as any set criterion fires."""

    max_fes: int | None = Field(default=None, ge=1)
    max_generations: int | None = Field(default=None, ge=0)
    max_stall_generations: int | None = Field(default=None, ge=1)

    @model_validator(mode="after")
    def validate_any(self) -> "TerminationCriteria":
        if (
            self.max_fes is None
            and self.max_generations is None
            and self.max_stall_generations is None
        ):
            raise ValueError("At least one termination criterion must be set")
        return self


class TopologyConfig(_Section):
    """Archipelago arrangement."""

    kind: Literal["radial", "ring", "fully_connected"] = "radial"
    n_islands: int = Field(default=1, ge=1)
    # Radial only; defaults to 4 rings when N_i is a multiple of 4, else one spoke
    rings: int | None = Field(default=None, ge=1)

    @model_validator(mode="after")
    def validate_rings(self) -> "TopologyConfig":
        if self.kind == "radial" and self.rings is not None and self.n_islands % self.rings:
            raise ValueError(
                f"Radial topology needs n_islands ({self.n_islands}) divisible by "
                f"rings ({self.rings})"
            )
        return self

    @property
    def resolved_rings(self) -> int:
        if self.rings is not None:
            return self.rings
        return 4 if self.n_islands % 4 == 0 else self.n_islands


class MigrationConfig(_Section):
    """Synchronous elite migration schedule."""

    interval: int = Field(default=100, ge=1)
    probability: float = Field(default=0.5, ge=0.0, le=1.0)
    fraction: float = Field(default=0.05, ge=0.0, le=1.0)


class IslandSpec(_Section):
    """Per-island algorithm settings."""

    # Single islands self-adapt by default; archipelagos assign fixed strategies per island
    strategy: StrategyChoice = "adaptive"
    population_size: int | None = Field(default=None, ge=1)
    init_method: Literal["uniform", "latin_hypercube"] = "uniform"
    adaptation: AdaptationConfig = Field(default_factory=AdaptationConfig)
    epidemic: EpidemicConfig = Field(default_factory=EpidemicConfig)

    @field_validator("strategy")
    @classmethod
    def validate_strategy(cls, v: StrategyChoice) -> StrategyChoice:
        if v != "adaptive" and v not in STRATEGIES:
            raise ValueError(f"Unknown mutation strategy {v}; valid: {STRATEGIES} or 'adaptive'")
        return v

    @model_validator(mode="after")
    def validate_population(self) -> "IslandSpec":
        if self.population_size is not None:
            needed = required_population(self.strategies_in_use)
            if self.population_size < needed:
                raise ValueError(
                    f"population_size {self.population_size} is too small: mutation strategies "
                    f"{sorted(self.strategies_in_use)} need at least {needed} members "
                    f"(distinct donor indices plus the target)"
                )
        return self

    @property
    def adapts_strategy(self) -> bool:
        return self.strategy == "adaptive" or self.adaptation.adapt_strategy

    @property
    def fixed_strategy(self) -> int:
        """Strategy used when it does not self-adapt."""
        return 1 if self.strategy == "adaptive" else int(self.strategy)

    @property
    def strategies_in_use(self) -> set[int]:
        if self.adapts_strategy:
            return set(self.adaptation.strategy_pool)
        return {self.fixed_strategy}

    def resolved_population_size(self, dimension: int) -> int:
        """N_p, defaulting to the lower end of the 5D-10D guidance."""
        if self.population_size is not None:
            return self.population_size
        return max(required_population(self.strategies_in_use), 5 * dimension)

    def with_strategy(self, strategy: StrategyChoice) -> "IslandSpec":
        """Copy running ``strategy``, validated like a freshly built spec.

        Raises:
            pydantic.ValidationError: If the population is too small for ``strategy``
        """
        return IslandSpec.model_validate({**self.model_dump(), "strategy": strategy})

    def effective_adaptation(self) -> AdaptationConfig:
        """Adaptation settings with strategy adaptation switched on when requested."""
        if self.strategy == "adaptive" and not self.adaptation.adapt_strategy:
            return self.adaptation.model_copy(update={"adapt_strategy": True})
        return self.adaptation
