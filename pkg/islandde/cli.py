"""Command-line entry point: run, summarize, plotdata."""

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path

from islandde import __version__
from islandde.config import get_settings
from islandde.core.exceptions import ConfigurationError, IslandDEError
from islandde.core.logging import setup_logging
from islandde.services.experiment import (
    ExperimentRunner,
    config_from_dict,
    parse_config,
    plotdata_directory,
    summarize_directory,
)
from islandde.services.experiment.config_loader import config_to_dict
from islandde.services.experiment.statistics import SUMMARY_COLUMNS

EXIT_OK = 0
EXIT_ERROR = 2


def _seed_list(text: str) -> list[int]:
    try:
        seeds = [int(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"seeds must be comma-separated integers: {text}") from e
    if not seeds:
        raise argparse.ArgumentTypeError("at least one seed is required")
    return seeds


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="islandde",
        description="Self-adaptive island-model Differential Evolution experiments",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="Run every seed of an experiment config")
    run.add_argument("config", type=Path, help="YAML experiment config")
    run.add_argument("--seeds", type=_seed_list, help="Comma-separated seeds overriding the config")
    run.add_argument("--out", type=Path, help="Output root (default: config, then settings)")
    run.add_argument("--workers", type=int, help="Parallel workers (default: settings)")

    summarize = commands.add_parser("summarize", help="Recompute summary.csv of a batch")
    summarize.add_argument("directory", type=Path)

    plotdata = commands.add_parser("plotdata", help="Recompute plotdata.csv of a batch")
    plotdata.add_argument("directory", type=Path)
    return parser


def _run(args: argparse.Namespace) -> None:
    if args.workers is not None and args.workers < 1:
        raise ConfigurationError("--workers", f"must be at least 1, got {args.workers}")
    settings = get_settings()
    config = parse_config(args.config)
    if args.seeds is not None:
        config = config_from_dict({**config_to_dict(config), "seeds": args.seeds})
    report = ExperimentRunner(config, settings).run(
        seeds=config.seeds, output_dir=args.out, workers=args.workers
    )
    print(f"Results written to {report.directory}")


def _summarize(args: argparse.Namespace) -> None:
    row = summarize_directory(args.directory)
    print(",".join(SUMMARY_COLUMNS))
    print(
        f"{row.config_id},{row.n_islands},{row.population_size},{row.n_generations},"
        f"{row.mean!r},{row.std!r},{row.best!r}"
    )


def _plotdata(args: argparse.Namespace) -> None:
    print(f"Plot data written to {plotdata_directory(args.directory)}")


def main(argv: Sequence[str] | None = None) -> int:
    """Parse arguments, dispatch, and map package errors to exit code 2."""
    args = build_parser().parse_args(argv)
    setup_logging(get_settings().log_level)
    handlers = {"run": _run, "summarize": _summarize, "plotdata": _plotdata}
    try:
        handlers[args.command](args)
    except IslandDEError as e:
        print(f"error: {e.code}: {e.message}", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
