"""Seed batches: run, write histories, summarise."""

from collections.abc import Sequence
from dataclasses import dataclass, field
from pathlib import Path

from islandde.config import Settings, get_settings
from islandde.core.exceptions import ExperimentIOError
from islandde.core.logging import logger
from islandde.core.random import RandomSource
from islandde.core.workers import WorkerPool
from islandde.models.experiment import ExperimentConfig
from islandde.models.history import RunHistory, RunResult, SummaryRow
from islandde.services.archipelago import Topology, evolve_archipelago, island_specs
from islandde.services.experiment.config_loader import parse_config, write_config
from islandde.services.experiment.history_io import read_history, write_history
from islandde.services.experiment.statistics import emit_plotdata, summarize, write_summary
from islandde.services.problems import ProblemFactory
from islandde.services.pruning import run_with_pruning

CONFIG_FILE = "config.yaml"
SUMMARY_FILE = "summary.csv"
PLOTDATA_FILE = "plotdata.csv"


def history_file(directory: Path, seed: int) -> Path:
    return directory / f"seed_{seed}.csv"


@dataclass
class ExperimentReport:
    """Results of one batch and where they were written."""

    directory: Path
    results: dict[int, RunResult] = field(default_factory=dict)
    summary: SummaryRow | None = None


class ExperimentRunner:
    """Runs every seed of an experiment config."""

    def __init__(self, config: ExperimentConfig, settings: Settings | None = None):
        self.config = config
        self.settings = settings or get_settings()
        self.factory = ProblemFactory()
        self.problem = self.factory.get_problem(config.problem)
        self.topology_config = config.archipelago.topology

    @property
    def n_islands(self) -> int:
        return self.topology_config.n_islands

    @property
    def n_populations(self) -> int:
        """Populations evolving side by side; partial runs count when pruning one island."""
        if self.uses_partial_runs:
            return self.config.pruning.n_runs
        return self.n_islands

    @property
    def uses_partial_runs(self) -> bool:
        return self.n_islands == 1 and self.config.pruning.n_runs > 1

    @property
    def population_size(self) -> int:
        return self.config.island.resolved_population_size(self.problem.dimension)

    def run_seed(self, seed: int, pool: WorkerPool) -> RunResult:
        """One complete run under ``seed``."""
        config = self.config
        rng = RandomSource(seed)
        if self.uses_partial_runs:
            return run_with_pruning(
                self.problem,
                config.island,
                config.pruning,
                config.termination,
                rng,
                epsilon=config.epsilon,
                pool=pool,
                settings=self.settings,
            )
        topology = Topology.from_config(self.topology_config)
        return evolve_archipelago(
            self.problem,
            island_specs(config.island, topology, config.archipelago.strategies),
            topology,
            config.archipelago.migration,
            config.termination,
            rng,
            epsilon=config.epsilon,
            pruning=config.pruning,
            pool=pool,
            settings=self.settings,
        )

    def run(
        self,
        seeds: Sequence[int] | None = None,
        output_dir: Path | None = None,
        workers: int | None = None,
    ) -> ExperimentReport:
        """Run the batch and write its files under ``<output_dir>/<config id>/``.

        Args:
            seeds: Seeds to run instead of the configured ones
            output_dir: Output root; the config's, then the process setting, when omitted
            workers: Worker count overriding the process setting

        Returns:
            Per-seed results and the batch summary

        Raises:
            ExperimentIOError: If an output file cannot be written
        """
        seeds = list(seeds) if seeds is not None else self.config.seeds
        root = output_dir or self.config.output_dir or self.settings.output_dir
        directory = root / self.config.id
        try:
            directory.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            raise ExperimentIOError(directory, str(e)) from e

        resolved = self.config.model_copy(update={"seeds": seeds})
        write_config(resolved, directory / CONFIG_FILE)

        report = ExperimentReport(directory=directory)
        with WorkerPool(workers or self.settings.workers) as pool:
            for seed in seeds:
                logger.info(f"Experiment {self.config.id}: seed {seed}")
                result = self.run_seed(seed, pool)
                path = history_file(directory, seed)
                write_history(result.history, path)
                logger.info(f"Wrote {path}")
                report.results[seed] = result

        histories = [report.results[s].history for s in seeds]
        report.summary = summarize(
            self.config.id, self.n_populations, self.population_size, histories
        )
        write_summary([report.summary], directory / SUMMARY_FILE)
        emit_plotdata(histories, directory / PLOTDATA_FILE)
        logger.info(f"Wrote {directory / SUMMARY_FILE} and {directory / PLOTDATA_FILE}")
        return report


def load_histories(directory: Path) -> dict[int, RunHistory]:
    """Per-seed histories of an experiment directory, keyed by seed.

    Raises:
        ExperimentIOError: If the directory holds no history files
    """
    histories: dict[int, RunHistory] = {}
    for path in directory.glob("seed_*.csv"):
        suffix = path.stem.removeprefix("seed_")
        if suffix.isdigit():
            histories[int(suffix)] = read_history(path)
    if not histories:
        raise ExperimentIOError(directory, "no seed_<n>.csv histories found")
    return dict(sorted(histories.items()))


def summarize_directory(directory: Path) -> SummaryRow:
    """Recompute ``summary.csv`` from the histories and config of a batch."""
    config = parse_config(directory / CONFIG_FILE)
    runner = ExperimentRunner(config)
    histories = list(load_histories(directory).values())
    row = summarize(config.id, runner.n_populations, runner.population_size, histories)
    write_summary([row], directory / SUMMARY_FILE)
    return row


def plotdata_directory(directory: Path) -> Path:
    """Recompute ``plotdata.csv`` from the histories of a batch."""
    path = directory / PLOTDATA_FILE
    emit_plotdata(list(load_histories(directory).values()), path)
    return path
