"""Custom exceptions for the package."""

from pathlib import Path


class IslandDEError(Exception):
    """Base exception for all optimizer errors."""

    def __init__(self, message: str, code: str | None = None):
        self.message = message
        self.code = code or "UNKNOWN_ERROR"
        super().__init__(message)


class ConfigurationError(IslandDEError):
    """Raised when a setting violates a precondition or range."""

    def __init__(self, key_path: str, message: str):
        full_message = f"{key_path}: {message}"
        super().__init__(full_message, code="CONFIGURATION_ERROR")
        self.key_path = key_path


class UndefinedDiversityError(IslandDEError):
    """Raised when a diversity score is requested for fewer than two individuals."""

    def __init__(self, size: int):
        message = f"Diversity is undefined for a population of {size} (need at least 2)"
        super().__init__(message, code="UNDEFINED_DIVERSITY")
        self.size = size


class InternalError(IslandDEError):
    """Raised when an internal invariant is broken."""

    def __init__(self, message: str):
        super().__init__(message, code="INTERNAL_ERROR")


class ExperimentIOError(IslandDEError):
    """Raised when an experiment file cannot be read or written."""

    def __init__(self, path: Path, message: str):
        full_message = f"I/O error ({path}): {message}"
        super().__init__(full_message, code="IO_ERROR")
        self.path = path


class HistoryFormatError(IslandDEError):
    """Raised when a history CSV does not match the expected schema."""

    def __init__(self, path: Path, message: str):
        full_message = f"Malformed history {path}: {message}"
        super().__init__(full_message, code="HISTORY_FORMAT_ERROR")
        self.path = path
