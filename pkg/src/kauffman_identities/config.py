# Copyright 2025 Altaira Labs
# SPDX-License-Identifier: Apache-2.0

"""Configuration loading from environment variables."""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from enum import Enum


class RenderFormat(str, Enum):
    """Supported diagram drawing formats."""

    ASCII = "ascii"
    SVG = "svg"

    @classmethod
    def from_string(cls, value: str) -> RenderFormat:
        """Create from string value."""
        try:
            return cls(value.lower())
        except ValueError:
            valid = [t.value for t in cls]
            raise ValueError(f"Invalid render format '{value}'. Must be one of: {valid}") from None


class MonoidKind(str, Enum):
    """Targets of the ``check`` command."""

    K3 = "K3"
    K4 = "K4"
    J4 = "J4"
    J3 = "J3"
    JN = "Jn"
    KN = "Kn"
    RMS = "RMS"

    @classmethod
    def from_string(cls, value: str) -> tuple[MonoidKind, int | None]:
        """Parse ``K4``, ``J3``, ``Jn:5``, ``Kn:5`` or ``RMS``.

        Returns:
            The kind and, for ``Jn``/``Kn``, the rank.
        """
        name, _, rank_text = value.partition(":")
        for kind in cls:
            if kind.value.lower() == name.lower():
                break
        else:
            valid = [t.value for t in cls]
            raise ValueError(f"Invalid monoid '{value}'. Must be one of: {valid}")
        if kind in (cls.JN, cls.KN):
            if not rank_text.isdigit():
                raise ValueError(f"Monoid '{kind.value}' needs a rank, e.g. '{kind.value}:5'")
            return kind, int(rank_text)
        if rank_text:
            raise ValueError(f"Monoid '{kind.value}' does not take a rank")
        return kind, None


@dataclass
class Config:
    """Search bounds and defaults loaded from environment variables."""

    # Reproducibility
    seed: int = 0

    # Exponential oracles
    oracle_max_letters: int = 16
    monoid_budget: int = 20_000_000

    # Randomised falsification
    falsify_budget: int = 10_000

    # Jones enumeration
    max_jones_rank: int = 8
    table_rank_limit: int = 6

    log_level: str = "WARNING"

    # Optional YAML file with per-suite parameters
    suites_config_path: str = ""


class ConfigError(Exception):
    """Error in configuration."""


def load_config() -> Config:
    """Load configuration from environment variables.

    Returns:
        Config object with all settings.

    Raises:
        ConfigError: If a value is malformed or inconsistent.
    """
    config = Config(
        seed=_parse_int("KAUFFMAN_SEED", 0),
        oracle_max_letters=_parse_int("KAUFFMAN_ORACLE_MAX_LETTERS", 16),
        monoid_budget=_parse_int("KAUFFMAN_MONOID_BUDGET", 20_000_000),
        falsify_budget=_parse_int("KAUFFMAN_FALSIFY_BUDGET", 10_000),
        max_jones_rank=_parse_int("KAUFFMAN_MAX_JONES_RANK", 8),
        table_rank_limit=_parse_int("KAUFFMAN_TABLE_RANK_LIMIT", 6),
        log_level=_get_or_default("KAUFFMAN_LOG_LEVEL", "WARNING").upper(),
        suites_config_path=os.getenv("KAUFFMAN_SUITES_CONFIG", ""),
    )

    _validate_config(config)

    return config


def _get_or_default(name: str, default: str) -> str:
    """Get an environment variable with a default."""
    return os.getenv(name) or default


def _parse_int(name: str, default: int) -> int:
    """Parse an integer environment variable."""
    value = os.getenv(name)
    if not value:
        return default
    try:
        return int(value)
    except ValueError as e:
        raise ConfigError(f"Invalid {name}: must be an integer") from e


def _validate_config(config: Config) -> None:
    """Validate configuration consistency."""
    for name, value in (
        ("KAUFFMAN_ORACLE_MAX_LETTERS", config.oracle_max_letters),
        ("KAUFFMAN_MONOID_BUDGET", config.monoid_budget),
        ("KAUFFMAN_FALSIFY_BUDGET", config.falsify_budget),
    ):
        if value < 1:
            raise ConfigError(f"{name} must be positive")

    if config.max_jones_rank < 2:
        raise ConfigError("KAUFFMAN_MAX_JONES_RANK must be at least 2")

    # Cayley tables are only built for ranks that can be enumerated
    if config.table_rank_limit > config.max_jones_rank:
        raise ConfigError("KAUFFMAN_TABLE_RANK_LIMIT cannot exceed KAUFFMAN_MAX_JONES_RANK")

    if not isinstance(logging.getLevelName(config.log_level), int):
        raise ConfigError(f"Invalid KAUFFMAN_LOG_LEVEL '{config.log_level}'")
