"""Experiment config files (YAML)."""

from pathlib import Path
from typing import Any

import yaml
from pydantic import ValidationError

from islandde.core.exceptions import ConfigurationError, ExperimentIOError
from islandde.models.experiment import ExperimentConfig


def _key_path(location: tuple[int | str, ...]) -> str:
    return ".".join(str(part) for part in location) or "<root>"


def config_from_dict(data: Any) -> ExperimentConfig:
    """Validate a parsed mapping.

    Raises:
        ConfigurationError: Naming the dotted key path of the first invalid entry
    """
    if not isinstance(data, dict):
        raise ConfigurationError("<root>", "Config must be a mapping of sections")
    try:
        return ExperimentConfig.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        raise ConfigurationError(_key_path(first["loc"]), first["msg"]) from e


def parse_config(path: Path) -> ExperimentConfig:
    """Load and validate an experiment config file.

    Raises:
        ExperimentIOError: If the file cannot be read or is not valid YAML
        ConfigurationError: If a value is missing, unknown or out of range
    """
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ExperimentIOError(path, str(e)) from e
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise ExperimentIOError(path, f"invalid YAML: {e}") from e
    return config_from_dict(data)


def config_to_dict(config: ExperimentConfig) -> dict[str, Any]:
    return config.model_dump(mode="json")


def emit_config(config: ExperimentConfig) -> str:
    """YAML text that parses back to an equal config."""
    return yaml.safe_dump(config_to_dict(config), sort_keys=False)


def write_config(config: ExperimentConfig, path: Path) -> None:
    try:
        path.write_text(emit_config(config), encoding="utf-8")
    except OSError as e:
        raise ExperimentIOError(path, str(e)) from e
