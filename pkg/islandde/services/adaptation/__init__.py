"""jDE control-parameter self-adaptation."""

from islandde.services.adaptation.self_adaptation import (
    ControlParameters,
    adapt_params,
    adapted_parameters,
    draw_initial,
    init_params,
)

__all__ = [
    "ControlParameters",
    "adapt_params",
    "adapted_parameters",
    "draw_initial",
    "init_params",
]
