"""Per-generation history CSV files."""

import csv
from pathlib import Path

from islandde.core.exceptions import ExperimentIOError, HistoryFormatError
from islandde.models.history import GenerationRecord, RunHistory

BASE_COLUMNS = [
    "generation",
    "fes",
    "best_f",
    "best_psi_max",
    "epsilon",
    "diversity",
    "epidemic_fired",
    "pruning_event",
]


def history_columns(n_islands: int) -> list[str]:
    return BASE_COLUMNS + [f"island_{k}_best_f" for k in range(n_islands)]


def _format(value: float | int) -> str:
    # repr round-trips every float exactly, including inf and nan
    return repr(value)


def write_history(history: RunHistory, path: Path) -> None:
    """Write one row per generation.

    Raises:
        ExperimentIOError: If the file cannot be written
    """
    columns = history_columns(history.n_islands)
    try:
        with open(path, "w", newline="", encoding="utf-8") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(columns)
            for r in history.records:
                writer.writerow(
                    [
                        r.generation,
                        r.fes,
                        _format(r.best_f),
                        _format(r.best_psi_max),
                        _format(r.epsilon),
                        _format(r.diversity),
                        r.epidemic_fired,
                        r.pruning_event,
                        *(_format(v) for v in r.island_best_f),
                    ]
                )
    except OSError as e:
        raise ExperimentIOError(path, str(e)) from e


def read_history(path: Path) -> RunHistory:
    """Read a history written by :func:`write_history`.

    Raises:
        ExperimentIOError: If the file cannot be read
        HistoryFormatError: If the header or a row does not match the schema
    """
    try:
        with open(path, newline="", encoding="utf-8") as f:
            rows = list(csv.reader(f))
    except OSError as e:
        raise ExperimentIOError(path, str(e)) from e

    if not rows:
        raise HistoryFormatError(path, "file is empty")
    header = rows[0]
    n_islands = len(header) - len(BASE_COLUMNS)
    if n_islands < 0 or header != history_columns(n_islands):
        raise HistoryFormatError(path, f"unexpected header {header}")

    history = RunHistory()
    for line, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise HistoryFormatError(
                path, f"line {line} has {len(row)} fields, expected {len(header)}"
            )
        try:
            history.append(
                GenerationRecord(
                    generation=int(row[0]),
                    fes=int(row[1]),
                    best_f=float(row[2]),
                    best_psi_max=float(row[3]),
                    epsilon=float(row[4]),
                    diversity=float(row[5]),
                    epidemic_fired=int(row[6]),
                    pruning_event=int(row[7]),
                    island_best_f=[float(v) for v in row[len(BASE_COLUMNS) :]],
                )
            )
        except ValueError as e:
            raise HistoryFormatError(path, f"line {line}: {e}") from e
    return history
