"""
Configuration management for the Pfaff-Darboux convexity toolkit.
Centralizes search budgets, sampling defaults and logging settings.
"""
import logging
from typing import List

from sympy import Rational

from exceptions import ConfigurationError

try:
    from pydantic_settings import BaseSettings
except ImportError:
    from pydantic import BaseSettings


class Settings(BaseSettings):
    """Toolkit settings with environment variable support."""

    # Reproducibility defaults (CLI flags override these per invocation)
    DEFAULT_SEED: int = 0
    DEFAULT_SAMPLES: int = 200
    DEFAULT_BUDGET: int = 500

    # Leg+ search: grid values in probe order, then random rationals p/q
    SEARCH_GRID: List[int] = [0, 1, -1, 2, -2]
    RANDOM_NUMERATOR_BOUND: int = 8
    RANDOM_DENOMINATOR_BOUND: int = 4

    # Constant searches: c, m, b double from 1; epsilon halves from 1
    MAX_DOUBLINGS: int = 40
    MAX_HALVINGS: int = 40

    # Sampled-ball certificate
    SAMPLE_RADIUS_START: str = "1/2"
    MAX_RADIUS_BISECTIONS: int = 16
    SAMPLE_DENOMINATOR: int = 1024

    # Pipeline steps re-check the chart identity before rewriting it
    VERIFY_STEP_IDENTITIES: bool = True

    # Logging
    LOG_LEVEL: str = "INFO"
    LOG_CONSOLE_LEVEL: str = "WARNING"
    LOG_FILE: str = "logs/pfaff_convex.log"
    LOG_MAX_BYTES: int = 10_000_000  # 10MB
    LOG_BACKUP_COUNT: int = 5

    model_config = {
        "env_file": ".env",
        "env_file_encoding": "utf-8"
    }


def validate_settings(config: Settings) -> Settings:
    """Reject values the searches and samplers cannot run with."""
    for key in ("DEFAULT_SAMPLES", "DEFAULT_BUDGET", "MAX_DOUBLINGS", "MAX_HALVINGS", "SAMPLE_DENOMINATOR"):
        if getattr(config, key) <= 0:
            raise ConfigurationError(key, f"must be positive, got {getattr(config, key)}")
    if not config.SEARCH_GRID:
        raise ConfigurationError("SEARCH_GRID", "needs at least one value")
    try:
        radius = Rational(config.SAMPLE_RADIUS_START)
    except (TypeError, ValueError) as exc:
        raise ConfigurationError("SAMPLE_RADIUS_START", f"not a rational: {config.SAMPLE_RADIUS_START!r}") from exc
    if radius <= 0:
        raise ConfigurationError("SAMPLE_RADIUS_START", f"must be positive, got {config.SAMPLE_RADIUS_START!r}")
    for key in ("LOG_LEVEL", "LOG_CONSOLE_LEVEL"):
        if not isinstance(logging.getLevelName(getattr(config, key).upper()), int):
            raise ConfigurationError(key, f"unknown log level {getattr(config, key)!r}")
    return config


# Global settings instance
settings = validate_settings(Settings())
