"""Package logger.

Records go to stderr; stdout carries the CSV rows printed by the CLI.
"""

import logging
import sys
from typing import Literal

LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]

LOGGER_NAME = "islandde"

# Thread name tells slot and island workers apart
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - [%(threadName)s] %(message)s"


def setup_logging(level: LogLevel = "INFO") -> logging.Logger:
    """Configure the package logger, or re-level it when already configured.

    Args:
        level: Logging level, usually ``Settings.log_level``

    Returns:
        The ``islandde`` logger
    """
    numeric = logging.getLevelName(level)
    package_logger = logging.getLogger(LOGGER_NAME)
    package_logger.setLevel(numeric)

    if not package_logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt="%Y-%m-%d %H:%M:%S"))
        package_logger.addHandler(handler)
    for handler in package_logger.handlers:
        handler.setLevel(numeric)

    return package_logger


logger = setup_logging()
