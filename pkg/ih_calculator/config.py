"""
Centralized application configuration using pydantic.
"""
from __future__ import annotations

import logging
from pathlib import Path
from typing import Any, Dict, Literal, Optional

from pydantic import Field, ValidationError, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from .exceptions import ConfigurationError

# ---------------------------------------------------------------------------- #
# Logging configuration (importing this module sets global logging defaults)
# ---------------------------------------------------------------------------- #
LOG_FORMAT = "%(asctime)s | %(levelname)-8s | %(name)s | %(message)s"
# Only touch the root logger when the host application has not configured it.
if not logging.getLogger().handlers:
    logging.basicConfig(format=LOG_FORMAT, level=logging.INFO)
logger = logging.getLogger(__name__)

_CURRENT_SETTINGS: "Settings | None" = None


class Settings(BaseSettings):
    """Validated settings loaded from ``IH_*`` environment variables or ``.env``."""

    model_config = SettingsConfigDict(
        env_prefix="IH_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",
    )

    # ------------------------------------------------------------------ #
    # Output
    # ------------------------------------------------------------------ #
    OUTPUT_DIR: Path = Path("output_run")
    LOG_LEVEL: str = "INFO"
    DEFAULT_FORMAT: Literal["text", "structured"] = "text"

    # ------------------------------------------------------------------ #
    # Sweep bounds and execution
    # ------------------------------------------------------------------ #
    MAX_WORKERS: int = Field(default=1, ge=1, description="Process-pool size for sweeps; 1 runs in-process")
    SCHUBERT_MAX_L: int = Field(default=8, ge=2)
    HYPERSURFACE_MAX_D: int = Field(default=6, ge=1)
    ENGINE_SAMPLES: int = Field(default=1000, ge=1)
    RANDOM_SEED: int = 0
    SHOW_PROGRESS: bool = False

    @field_validator("LOG_LEVEL")
    @classmethod
    def _validate_log_level(cls, v: str) -> str:
        level = v.upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ValueError(f"Unknown log level: {v}")
        return level


def get_settings(override_values: Optional[Dict[str, Any]] = None) -> Settings:
    """Return the cached settings, or a fresh uncached instance with overrides.

    Raises:
        ConfigurationError: If the environment or overrides fail validation.
    """
    global _CURRENT_SETTINGS

    if override_values is None and _CURRENT_SETTINGS is not None:
        return _CURRENT_SETTINGS

    try:
        settings_instance = Settings(**(override_values or {}))
    except ValidationError as exc:
        raise ConfigurationError(f"Invalid settings: {exc}") from exc

    if override_values is None:
        _CURRENT_SETTINGS = settings_instance
    else:
        logger.debug("Created settings with overrides: %s", override_values)

    logger.debug("Loaded settings: %s", settings_instance.model_dump())
    return settings_instance


def configure_logging(level: str | None = None) -> None:
    """Apply ``level`` (or the configured ``LOG_LEVEL``) to the root logger."""
    resolved = (level or get_settings().LOG_LEVEL).upper()
    try:
        logging.getLogger().setLevel(resolved)
    except ValueError as exc:
        raise ConfigurationError(f"Unknown log level: {level}") from exc
