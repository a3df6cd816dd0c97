"""Cross-seed statistics and plot data."""

import csv
from collections.abc import Sequence
from pathlib import Path

import numpy as np

from islandde.core.exceptions import ExperimentIOError
from islandde.core.logging import logger
from islandde.models.history import RunHistory, SummaryRow

SUMMARY_COLUMNS = [
    "config_id",
    "n_islands",
    "population_size",
    "n_generations",
    "mean",
    "std",
    "best",
]
PLOTDATA_COLUMNS = ["generation", "min_best_f", "mean_best_f"]


def summarize(
    config_id: str,
    n_islands: int,
    population_size: int,
    histories: Sequence[RunHistory],
) -> SummaryRow:
    """Mean, population std and best of the final best fitness across seeds."""
    if not histories:
        raise ValueError("Summary needs at least one history")
    finals = np.array([h.final.best_f for h in histories], dtype=np.float64)
    return SummaryRow(
        config_id=config_id,
        n_islands=n_islands,
        population_size=population_size,
        n_generations=max(h.final.generation for h in histories),
        mean=float(np.mean(finals)),
        std=float(np.std(finals)),
        best=float(np.min(finals)),
    )


def write_summary(rows: Sequence[SummaryRow], path: Path) -> None:
    try:
        with open(path, "w", newline="", encoding="utf-8") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(SUMMARY_COLUMNS)
            for row in rows:
                writer.writerow(
                    [
                        row.config_id,
                        row.n_islands,
                        row.population_size,
                        row.n_generations,
                        repr(row.mean),
                        repr(row.std),
                        repr(row.best),
                    ]
                )
    except OSError as e:
        raise ExperimentIOError(path, str(e)) from e


def plotdata(histories: Sequence[RunHistory]) -> list[tuple[int, float, float]]:
    """Per generation: minimum and mean of best fitness across runs.

    Histories of different lengths are cut to the shortest.
    """
    if not histories:
        raise ValueError("Plot data needs at least one history")
    lengths = {len(h) for h in histories}
    shortest = min(lengths)
    if len(lengths) > 1:
        logger.warning(
            f"Histories have different lengths {sorted(lengths)}; aligning on the shortest "
            f"({shortest} records)"
        )
    traces = np.array([h.best_f_trace()[:shortest] for h in histories], dtype=np.float64)
    generations = [r.generation for r in histories[0].records[:shortest]]
    return [
        (generation, float(traces[:, g].min()), float(traces[:, g].mean()))
        for g, generation in enumerate(generations)
    ]


def emit_plotdata(histories: Sequence[RunHistory], path: Path) -> None:
    """Write the aggregated best-fitness curves."""
    try:
        with open(path, "w", newline="", encoding="utf-8") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(PLOTDATA_COLUMNS)
            for generation, lowest, mean in plotdata(histories):
                writer.writerow([generation, repr(lowest), repr(mean)])
    except OSError as e:
        raise ExperimentIOError(path, str(e)) from e
