"""Process configuration via environment variables."""

from pathlib import Path
from typing import Literal

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Runtime settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="ISLANDDE_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = "INFO"

    # Parallel workers (islands or slots); 1 runs inline
    workers: int = Field(default=1, ge=1)

    # Default output location for experiment batches
    output_dir: Path = Path("./results")

    # Assert box containment on every population after every generation
    debug_checks: bool = False

    # Progress line every N generations at DEBUG level
    log_every: int = Field(default=100, ge=1)

    @field_validator("output_dir")
    @classmethod
    def ensure_parent_exists(cls, v: Path) -> Path:
        """Create parent directory if it doesn't exist."""
        v.parent.mkdir(parents=True, exist_ok=True)
        return v


def get_settings() -> Settings:
    """Get runtime settings."""
    return Settings()
