# Copyright 2025 Altaira Labs
# SPDX-License-Identifier: Apache-2.0

"""Kauffman identities - diagram monoid arithmetic and identity checking."""

from kauffman_identities.checks import check_j4, check_k3_k4, falsify_kn
from kauffman_identities.config import Config, load_config
from kauffman_identities.grammar import parse_identity
from kauffman_identities.words import Identity, Letter, Word

__version__ = "0.1.0"

__all__ = [
    "Config",
    "load_config",
    "Identity",
    "Letter",
    "Word",
    "parse_identity",
    "check_k3_k4",
    "check_j4",
    "falsify_kn",
]
