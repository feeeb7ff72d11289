"""
Runtime settings read from the environment (and an optional .env file).
"""

import os
import logging
from dataclasses import dataclass
from dotenv import load_dotenv

load_dotenv()

logger = logging.getLogger(__name__)

DEFAULT_BUDGET_MS = 10_000
DEFAULT_WORKERS = 1
DEFAULT_LOG_LEVEL = "INFO"

_settings = None


@dataclass(frozen=True)
class Settings:
    budget_ms: int = DEFAULT_BUDGET_MS
    workers: int = DEFAULT_WORKERS
    log_level: str = DEFAULT_LOG_LEVEL


def _int_from_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"{name}={raw!r} is not an integer, using {default}")
        return default


def load_settings() -> Settings:
    """Read settings from the environment without caching."""
    workers = _int_from_env("CRITCOLOR_WORKERS", DEFAULT_WORKERS)
    if workers < 1:
        logger.warning(f"CRITCOLOR_WORKERS={workers} is below 1, using {DEFAULT_WORKERS}")
        workers = DEFAULT_WORKERS

    log_level = os.getenv("CRITCOLOR_LOG_LEVEL", DEFAULT_LOG_LEVEL).upper()
    # logging.getLevelNamesMapping() is 3.11+; it returns a copy of _nameToLevel
    level_names = getattr(logging, "getLevelNamesMapping", lambda: dict(logging._nameToLevel))()
    if log_level not in level_names:
        logger.warning(f"CRITCOLOR_LOG_LEVEL={log_level!r} is unknown, using {DEFAULT_LOG_LEVEL}")
        log_level = DEFAULT_LOG_LEVEL

    return Settings(
        budget_ms=_int_from_env("CRITCOLOR_BUDGET_MS", DEFAULT_BUDGET_MS),
        workers=workers,
        log_level=log_level,
    )


def get_settings() -> Settings:
    """Get or create the settings singleton."""
    global _settings

    if _settings is None:
        _settings = load_settings()
        logger.debug(f"Settings loaded: {_settings}")

    return _settings


def reset_settings() -> None:
    global _settings
    _settings = None
