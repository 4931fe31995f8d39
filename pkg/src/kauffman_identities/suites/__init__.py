# Copyright 2025 Altaira Labs
# SPDX-License-Identifier: Apache-2.0

"""Verification suites."""

from kauffman_identities.suites.config import CorpusConfig, SuiteSettings, SuitesConfig, load_suites_config
from kauffman_identities.suites.registry import SuiteRegistry

__all__ = [
    "CorpusConfig",
    "SuiteSettings",
    "SuitesConfig",
    "load_suites_config",
    "SuiteRegistry",
]
