# Copyright 2025 Altaira Labs
# SPDX-License-Identifier: Apache-2.0

"""Identity checkers, reference oracles and the K_n falsifier."""

from kauffman_identities.checks.checker import Mode, check_j4, check_k3_k4, failing_subset
from kauffman_identities.checks.falsify import falsify_kn
from kauffman_identities.checks.oracle import oracle_all_Y, oracle_finite_monoid
from kauffman_identities.checks.profile import CutPairProfile, OccurrenceOrders, profile
from kauffman_identities.checks.verdict import Condition, FailingSubset, SubstitutionWitness, Verdict

__all__ = [
    "Mode",
    "check_k3_k4",
    "check_j4",
    "failing_subset",
    "falsify_kn",
    "oracle_all_Y",
    "oracle_finite_monoid",
    "CutPairProfile",
    "OccurrenceOrders",
    "profile",
    "Condition",
    "FailingSubset",
    "SubstitutionWitness",
    "Verdict",
]
