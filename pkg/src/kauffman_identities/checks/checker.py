# Copyright 2025 Altaira Labs
# SPDX-License-Identifier: Apache-2.0

"""Polynomial identity checkers for K_3 / K_4 and J_4.

An identity w = w' holds in K_3 (equivalently K_4) iff both sides have the
same content and, for every proper subset Y of it, the residues u, u' with
Y deleted have the same first letter (a), the same last letter (b) and the
same number of occurrences of every length-2 factor (c). For J_4, (c) is
weakened to: every length-2 factor occurs in u iff it occurs in u' (c').

Rather than enumerating Y, the checkers compare fingerprints:
  - (a) over all Y holds iff the first-occurrence orders agree;
  - (b) over all Y holds iff the last-occurrence orders agree;
  - (c) over all Y holds iff the cut-pair multisets agree;
  - (c') over all Y holds iff, per letter pair, the minimal between-sets agree.
On failure the smallest violating Y is recovered from the first difference.
"""

from __future__ import annotations

import logging
from collections import Counter
from enum import Enum

from kauffman_identities.checks.profile import CutKey, CutPairProfile, iter_bits, profile
from kauffman_identities.checks.verdict import Condition, FailingSubset, Verdict
from kauffman_identities.words import Identity, Letter, content

logger = logging.getLogger(__name__)


class Mode(str, Enum):
    """Which length-2 factor condition applies."""

    COUNTS = "counts"
    SETS = "sets"


def _order_failure(lhs: tuple[Letter, ...], rhs: tuple[Letter, ...], condition: Condition) -> FailingSubset | None:
    for t, (x, y) in enumerate(zip(lhs, rhs)):
        if x is not y:
            return FailingSubset(frozenset(lhs[:t]), condition)
    return None


def _decode(mask: int, letters: dict[int, Letter]) -> frozenset[Letter]:
    return frozenset(letters[i] for i in iter_bits(mask))


def _count_failures(lhs: CutPairProfile, rhs: CutPairProfile, letters: dict[int, Letter]) -> list[FailingSubset]:
    """Per letter pair, the smallest between-sets whose multiplicities differ."""
    smallest: dict[tuple[int, int], list[int]] = {}
    diff: Counter[CutKey] = Counter(lhs.counts)
    diff.subtract(rhs.counts)
    for (x, y, mask), d in diff.items():
        if d == 0:
            continue
        size = mask.bit_count()
        current = smallest.get((x, y))
        if current is None or size < current[0].bit_count():
            smallest[(x, y)] = [mask]
        elif size == current[0].bit_count():
            current.append(mask)
    return [
        FailingSubset(_decode(mask, letters), Condition.COUNTS)
        for masks in smallest.values()
        for mask in masks
    ]


def _set_failures(lhs: CutPairProfile, rhs: CutPairProfile, letters: dict[int, Letter]) -> list[FailingSubset]:
    """Per letter pair, the smallest sets in the symmetric difference of the minimal antichains."""
    left, right = lhs.minimal_sets(), rhs.minimal_sets()
    failures = []
    for pair in left.keys() | right.keys():
        differing = left.get(pair, frozenset()) ^ right.get(pair, frozenset())
        if not differing:
            continue
        size = min(m.bit_count() for m in differing)
        failures.extend(
            FailingSubset(_decode(m, letters), Condition.OCCURS) for m in differing if m.bit_count() == size
        )
    return failures


def failing_subset(identity: Identity, mode: Mode = Mode.COUNTS) -> FailingSubset | None:
    """Smallest failing Y (by size, then sorted letter names, then condition), or None."""
    lhs, rhs = identity.sides
    if content(lhs) != content(rhs):
        return FailingSubset(frozenset(), Condition.CONTENT)

    lhs_orders, lhs_profile = profile(lhs)
    rhs_orders, rhs_profile = profile(rhs)
    candidates = [
        f
        for f in (
            _order_failure(lhs_orders.first_order, rhs_orders.first_order, Condition.FIRST),
            _order_failure(lhs_orders.last_order, rhs_orders.last_order, Condition.LAST),
        )
        if f is not None
    ]
    letters = {**lhs_profile.letters, **rhs_profile.letters}
    if mode is Mode.COUNTS:
        candidates.extend(_count_failures(lhs_profile, rhs_profile, letters))
    else:
        candidates.extend(_set_failures(lhs_profile, rhs_profile, letters))

    if not candidates:
        return None
    return min(candidates, key=FailingSubset.sort_key)


def check_k3_k4(identity: Identity, monoid: str = "K4") -> Verdict:
    """Decide whether the identity holds in K_3 (and hence in K_4)."""
    failure = failing_subset(identity, Mode.COUNTS)
    logger.debug("Checked identity", extra={"monoid": monoid, "holds": failure is None})
    if failure is None:
        return Verdict.holding(monoid)
    return Verdict.failing(monoid, failure)


def check_j4(identity: Identity) -> Verdict:
    """Decide whether the identity holds in J_4."""
    failure = failing_subset(identity, Mode.SETS)
    logger.debug("Checked identity", extra={"monoid": "J4", "holds": failure is None})
    if failure is None:
        return Verdict.holding("J4")
    return Verdict.failing("J4", failure)
