"""Diversity-triggered partial restart."""

from dataclasses import dataclass

import numpy as np

from islandde.core.counting import fraction_count
from islandde.core.logging import logger
from islandde.core.random import RandomSource, StreamPurpose
from islandde.models.algorithm import EpidemicConfig
from islandde.models.individual import Population
from islandde.models.problem import Bounds
from islandde.services.constraints import rank
from islandde.services.epidemic.diversity import diversity_score
from islandde.services.population.initializer import PopulationInitializer


@dataclass(frozen=True)
class EpidemicOutcome:
    population: Population
    fired: bool
    diversity: float


def epidemic_sizes(config: EpidemicConfig, population_size: int) -> tuple[int, int]:
    """(elites kept, members reinitialised); at least one elite survives."""
    n_elite = min(max(1, fraction_count(config.rho_elite, population_size)), population_size)
    n_ill = fraction_count(config.rho_ill, population_size - n_elite)
    return n_elite, n_ill


def should_fire(
    config: EpidemicConfig, diversity: float, generation: int, last_epidemic_gen: int
) -> bool:
    return (
        config.enabled
        and diversity < config.d_tol
        and generation - last_epidemic_gen >= config.cooldown
    )


def maybe_epidemic(
    population: Population,
    config: EpidemicConfig,
    generation: int,
    last_epidemic_gen: int,
    initializer: PopulationInitializer,
    rng: RandomSource,
    *,
    eps: float,
    bounds: Bounds,
    original_bounds: Bounds,
    diversity: float | None = None,
) -> EpidemicOutcome:
    """Reinitialise a random share of the non-elite members when diversity collapses.

    Diversity is measured against ``original_bounds``; new members are drawn over
    ``bounds`` or ``original_bounds`` according to ``config.reinit_domain``.

    Returns:
        The population, unchanged unless the epidemic fired, with its diversity score
    """
    if diversity is None:
        diversity = diversity_score(population, original_bounds)
    if not should_fire(config, diversity, generation, last_epidemic_gen):
        return EpidemicOutcome(population, fired=False, diversity=diversity)

    n_elite, n_ill = epidemic_sizes(config, population.size)
    order = rank(population.members, eps)
    candidates = np.sort(np.asarray(order[n_elite:], dtype=np.intp))

    generator = rng.generator(StreamPurpose.EPIDEMIC, generation)
    ill = np.sort(generator.choice(candidates, size=n_ill, replace=False)) if n_ill else []
    domain = bounds if config.reinit_domain == "current" else original_bounds
    fresh = initializer.sample(len(ill), domain, generator)

    members = list(population.members)
    for slot, newcomer in zip(ill, fresh, strict=True):
        members[int(slot)] = newcomer
    restarted = population.with_members(members)
    new_diversity = diversity_score(restarted, original_bounds)

    logger.info(
        f"Epidemic at generation {generation}: diversity {diversity:.3g} < {config.d_tol:g}, "
        f"kept {n_elite} elites, reinitialised {len(ill)} (diversity now {new_diversity:.3g})"
    )
    return EpidemicOutcome(restarted, fired=True, diversity=new_diversity)
