# Copyright 2025 Altaira Labs
# SPDX-License-Identifier: Apache-2.0

"""Tests for configuration loading."""

import os
from unittest import mock

import pytest

from kauffman_identities.config import (
    ConfigError,
    MonoidKind,
    RenderFormat,
    load_config,
)


class TestLoadConfig:
    """Tests for load_config function."""

    def test_defaults(self) -> None:
        """Test loading with no environment variables set."""
        with mock.patch.dict(os.environ, {}, clear=True):
            config = load_config()

        assert config.seed == 0
        assert config.oracle_max_letters == 16
        assert config.falsify_budget == 10_000
        assert config.max_jones_rank == 8
        assert config.log_level == "WARNING"
        assert config.suites_config_path == ""

    def test_full_config(self) -> None:
        """Test loading full configuration."""
        env = {
            "KAUFFMAN_SEED": "42",
            "KAUFFMAN_ORACLE_MAX_LETTERS": "10",
            "KAUFFMAN_MONOID_BUDGET": "1000",
            "KAUFFMAN_FALSIFY_BUDGET": "500",
            "KAUFFMAN_MAX_JONES_RANK": "6",
            "KAUFFMAN_TABLE_RANK_LIMIT": "5",
            "KAUFFMAN_LOG_LEVEL": "debug",
            "KAUFFMAN_SUITES_CONFIG": "/etc/kauffman/suites.yaml",
        }
        with mock.patch.dict(os.environ, env, clear=True):
            config = load_config()

        assert config.seed == 42
        assert config.oracle_max_letters == 10
        assert config.monoid_budget == 1000
        assert config.falsify_budget == 500
        assert config.max_jones_rank == 6
        assert config.table_rank_limit == 5
        assert config.log_level == "DEBUG"
        assert config.suites_config_path == "/etc/kauffman/suites.yaml"

    def test_invalid_integer(self) -> None:
        """Test error on a non-numeric value."""
        with mock.patch.dict(os.environ, {"KAUFFMAN_SEED": "abc"}, clear=True):
            with pytest.raises(ConfigError) as exc_info:
                load_config()
            assert "KAUFFMAN_SEED" in str(exc_info.value)

    def test_non_positive_budget(self) -> None:
        """Test budgets must be positive."""
        with mock.patch.dict(os.environ, {"KAUFFMAN_FALSIFY_BUDGET": "0"}, clear=True):
            with pytest.raises(ConfigError) as exc_info:
                load_config()
            assert "KAUFFMAN_FALSIFY_BUDGET" in str(exc_info.value)

    def test_table_limit_above_rank(self) -> None:
        """Test the table limit cannot exceed the enumeration bound."""
        env = {"KAUFFMAN_MAX_JONES_RANK": "5", "KAUFFMAN_TABLE_RANK_LIMIT": "6"}
        with mock.patch.dict(os.environ, env, clear=True):
            with pytest.raises(ConfigError) as exc_info:
                load_config()
            assert "KAUFFMAN_TABLE_RANK_LIMIT" in str(exc_info.value)

    def test_small_jones_rank(self) -> None:
        """Test the enumeration bound must allow rank 2."""
        env = {"KAUFFMAN_MAX_JONES_RANK": "1", "KAUFFMAN_TABLE_RANK_LIMIT": "1"}
        with mock.patch.dict(os.environ, env, clear=True):
            with pytest.raises(ConfigError):
                load_config()

    def test_invalid_log_level(self) -> None:
        """Test error on an unknown log level."""
        with mock.patch.dict(os.environ, {"KAUFFMAN_LOG_LEVEL": "chatty"}, clear=True):
            with pytest.raises(ConfigError) as exc_info:
                load_config()
            assert "CHATTY" in str(exc_info.value)


class TestMonoidKind:
    """Tests for MonoidKind enum."""

    def test_from_string(self) -> None:
        """Test parsing fixed monoids case-insensitively."""
        assert MonoidKind.from_string("K4") == (MonoidKind.K4, None)
        assert MonoidKind.from_string("k3") == (MonoidKind.K3, None)
        assert MonoidKind.from_string("rms") == (MonoidKind.RMS, None)

    def test_ranked(self) -> None:
        """Test parsing monoid families with a rank."""
        assert MonoidKind.from_string("Kn:5") == (MonoidKind.KN, 5)
        assert MonoidKind.from_string("jn:6") == (MonoidKind.JN, 6)

    def test_missing_rank(self) -> None:
        """Test families require a rank."""
        with pytest.raises(ValueError) as exc_info:
            MonoidKind.from_string("Kn")
        assert "Kn:5" in str(exc_info.value)

    def test_unexpected_rank(self) -> None:
        """Test fixed monoids reject a rank."""
        with pytest.raises(ValueError):
            MonoidKind.from_string("K4:4")

    def test_invalid(self) -> None:
        """Test error on unknown monoid."""
        with pytest.raises(ValueError) as exc_info:
            MonoidKind.from_string("B2")
        assert "Invalid monoid" in str(exc_info.value)


class TestRenderFormat:
    """Tests for RenderFormat enum."""

    def test_from_string(self) -> None:
        """Test parsing render formats."""
        assert RenderFormat.from_string("ascii") == RenderFormat.ASCII
        assert RenderFormat.from_string("SVG") == RenderFormat.SVG

    def test_invalid(self) -> None:
        """Test error on invalid format."""
        with pytest.raises(ValueError) as exc_info:
            RenderFormat.from_string("png")
        assert "Invalid render format" in str(exc_info.value)
