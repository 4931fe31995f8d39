# Copyright 2025 Altaira Labs
# SPDX-License-Identifier: Apache-2.0

"""Verification suite parameters parsed from YAML."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any

import yaml


@dataclass
class CorpusConfig:
    """Identity corpora for the checker/oracle comparison."""

    random_identities: int = 10_000
    max_letters: int = 4
    max_length: int = 12
    exhaustive_letters: int = 2
    exhaustive_length: int = 6
    monoid_identities: int = 1_000
    monoid_letters: int = 3
    falsify_budget: int = 10_000


@dataclass
class SuiteSettings:
    """Parameters for a single suite."""

    name: str
    enabled: bool = True
    seed: int | None = None
    circle_range: tuple[int, int] = (-3, 3)
    samples: int = 2_000
    min_rank: int = 2
    max_rank: int = 7
    corpus: CorpusConfig = field(default_factory=CorpusConfig)

    @property
    def circles(self) -> range:
        """Inclusive circle range as a range object."""
        lo, hi = self.circle_range
        return range(lo, hi + 1)


# Per-suite defaults where they differ from SuiteSettings.
_SUITE_DEFAULTS: dict[str, dict[str, Any]] = {
    "relations": {"max_rank": 6},
    "catalan": {"max_rank": 7},
}


def default_settings(name: str) -> SuiteSettings:
    """Settings a suite runs with when nothing is configured."""
    return SuiteSettings(name=name, **_SUITE_DEFAULTS.get(name, {}))


@dataclass
class SuitesConfig:
    """Complete suites configuration."""

    seed: int | None = None
    suites: list[SuiteSettings] = field(default_factory=list)

    def get_suite(self, name: str) -> SuiteSettings:
        """Configured settings for a suite, falling back to its defaults."""
        for suite in self.suites:
            if suite.name == name:
                return suite
        return default_settings(name)


def load_suites_config(path: str | Path) -> SuitesConfig:
    """Load suite configuration from a YAML file.

    Args:
        path: Path to the suites.yaml file.

    Returns:
        Parsed SuitesConfig.

    Raises:
        FileNotFoundError: If the file doesn't exist.
        ValueError: If a value is malformed.
    """
    file_path = Path(path)
    if not file_path.exists():
        raise FileNotFoundError(f"Suites config not found: {path}")

    with open(file_path) as f:
        data = yaml.safe_load(f) or {}

    return _parse_config(data)


def _parse_config(data: dict[str, Any]) -> SuitesConfig:
    """Parse suites configuration from dict."""
    if not isinstance(data, dict):
        raise ValueError("Suites config must be a mapping")
    suites = [_parse_suite(name, suite_data or {}) for name, suite_data in (data.get("suites") or {}).items()]
    return SuitesConfig(seed=data.get("seed"), suites=suites)


def _parse_suite(name: str, data: dict[str, Any]) -> SuiteSettings:
    """Parse a single suite's settings."""
    settings = default_settings(name)
    settings = replace(
        settings,
        enabled=data.get("enabled", settings.enabled),
        seed=data.get("seed", settings.seed),
        samples=data.get("samples", settings.samples),
        min_rank=data.get("minRank", settings.min_rank),
        max_rank=data.get("maxRank", settings.max_rank),
    )

    if "circleRange" in data:
        bounds = data["circleRange"]
        if not isinstance(bounds, list) or len(bounds) != 2 or bounds[0] > bounds[1]:
            raise ValueError(f"Suite '{name}': circleRange must be [low, high]")
        settings.circle_range = (int(bounds[0]), int(bounds[1]))

    if "corpus" in data:
        cfg = data["corpus"]
        defaults = CorpusConfig()
        settings.corpus = CorpusConfig(
            random_identities=cfg.get("randomIdentities", defaults.random_identities),
            max_letters=cfg.get("maxLetters", defaults.max_letters),
            max_length=cfg.get("maxLength", defaults.max_length),
            exhaustive_letters=cfg.get("exhaustiveLetters", defaults.exhaustive_letters),
            exhaustive_length=cfg.get("exhaustiveLength", defaults.exhaustive_length),
            monoid_identities=cfg.get("monoidIdentities", defaults.monoid_identities),
            monoid_letters=cfg.get("monoidLetters", defaults.monoid_letters),
            falsify_budget=cfg.get("falsifyBudget", defaults.falsify_budget),
        )

    return settings
