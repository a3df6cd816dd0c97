"""Experiment configs, batch execution and result files."""

from islandde.services.experiment.config_loader import (
    config_from_dict,
    emit_config,
    parse_config,
    write_config,
)
from islandde.services.experiment.history_io import history_columns, read_history, write_history
from islandde.services.experiment.runner import (
    ExperimentReport,
    ExperimentRunner,
    load_histories,
    plotdata_directory,
    summarize_directory,
)
from islandde.services.experiment.statistics import (
    emit_plotdata,
    plotdata,
    summarize,
    write_summary,
)

__all__ = [
    "ExperimentReport",
    "ExperimentRunner",
    "config_from_dict",
    "emit_config",
    "emit_plotdata",
    "history_columns",
    "load_histories",
    "parse_config",
    "plotdata",
    "plotdata_directory",
    "read_history",
    "summarize",
    "summarize_directory",
    "write_config",
    "write_history",
    "write_summary",
]
