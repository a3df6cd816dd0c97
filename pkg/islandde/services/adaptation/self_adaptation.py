"""jDE self-adaptation of per-individual control parameters."""

from dataclasses import dataclass

import numpy as np

from islandde.core.exceptions import ConfigurationError
from islandde.models.algorithm import AdaptationConfig
from islandde.models.individual import Individual

# Uniform draws consumed per adaptation: value/trigger pairs for F, Cr and strategy
DRAWS_FIXED_STRATEGY = 4
DRAWS_ADAPTIVE_STRATEGY = 6


@dataclass(frozen=True, slots=True)
class ControlParameters:
    scale_factor: float
    crossover_prob: float
    strategy: int


def _pick(pool: list[int], u: float) -> int:
    return pool[min(int(u * len(pool)), len(pool) - 1)]


def _check_pool(config: AdaptationConfig) -> None:
    if config.adapt_strategy and not config.strategy_pool:
        raise ConfigurationError(
            "island.adaptation.strategy_pool", "Strategy adaptation needs a non-empty pool"
        )


def draw_initial(
    config: AdaptationConfig, generator: np.random.Generator, fixed_strategy: int
) -> ControlParameters:
    """Sample F and Cr uniformly over their ranges, and the strategy when it adapts."""
    _check_pool(config)
    scale_factor = config.f_min + generator.random() * config.delta_f
    crossover_prob = config.cr_min + generator.random() * config.delta_cr
    strategy = (
        _pick(config.strategy_pool, generator.random())
        if config.adapt_strategy
        else fixed_strategy
    )
    return ControlParameters(scale_factor, crossover_prob, strategy)


def init_params(
    individual: Individual,
    config: AdaptationConfig,
    generator: np.random.Generator,
    fixed_strategy: int = 1,
) -> Individual:
    """Give ``individual`` freshly sampled control parameters.

    Raises:
        ConfigurationError: If strategy adaptation is on with an empty pool
    """
    params = draw_initial(config, generator, fixed_strategy)
    return individual.with_parameters(params.scale_factor, params.crossover_prob, params.strategy)


def adapted_parameters(
    individual: Individual,
    config: AdaptationConfig,
    generator: np.random.Generator,
    fixed_strategy: int | None = None,
) -> ControlParameters:
    """Parameters for the next trial of ``individual``.

    Each of F, Cr and (when adapting) the strategy is independently resampled with
    probability tau, otherwise kept.

    Args:
        individual: Target whose parameters are inherited
        config: Adaptation ranges and tau
        generator: Slot generator; consumes 4 uniforms, or 6 when the strategy adapts
        fixed_strategy: Strategy of the hosting population when it does not adapt;
            overrides whatever strategy the individual arrived with

    Returns:
        Control parameters for the trial
    """
    n_draws = DRAWS_ADAPTIVE_STRATEGY if config.adapt_strategy else DRAWS_FIXED_STRATEGY
    p = generator.random(n_draws)
    tau = config.tau

    scale_factor = individual.scale_factor
    if p[1] < tau:
        scale_factor = config.f_min + p[0] * config.delta_f

    crossover_prob = individual.crossover_prob
    if p[3] < tau:
        crossover_prob = config.cr_min + p[2] * config.delta_cr

    strategy = individual.strategy
    if not config.adapt_strategy and fixed_strategy is not None:
        strategy = fixed_strategy
    elif config.adapt_strategy and p[5] < tau:
        _check_pool(config)
        strategy = _pick(config.strategy_pool, p[4])

    return ControlParameters(float(scale_factor), float(crossover_prob), strategy)


def adapt_params(
    individual: Individual, config: AdaptationConfig, generator: np.random.Generator
) -> Individual:
    """Return ``individual`` carrying possibly mutated control parameters."""
    params = adapted_parameters(individual, config, generator)
    return individual.with_parameters(params.scale_factor, params.crossover_prob, params.strategy)
