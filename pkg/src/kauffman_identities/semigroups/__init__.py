# Copyright 2025 Altaira Labs
# SPDX-License-Identifier: Apache-2.0

"""Semigroups: the abstract interface, Cayley-table monoids and Rees matrix semigroups."""

from kauffman_identities.semigroups.base import Semigroup
from kauffman_identities.semigroups.finite import FiniteMonoid
from kauffman_identities.semigroups.rees import ReesMatrixSemigroup, SandwichMatrix, Triple, builtin, witness_rms

__all__ = [
    "Semigroup",
    "FiniteMonoid",
    "ReesMatrixSemigroup",
    "SandwichMatrix",
    "Triple",
    "builtin",
    "witness_rms",
]
