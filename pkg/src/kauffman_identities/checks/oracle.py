# Copyright 2025 Altaira Labs
# SPDX-License-Identifier: Apache-2.0

"""Exponential reference deciders used to validate the fast checkers."""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterator

import numpy as np

from kauffman_identities.checks.checker import Mode
from kauffman_identities.checks.verdict import (
    Condition,
    FailingSubset,
    SubstitutionWitness,
    Verdict,
)
from kauffman_identities.errors import AlphabetTooLargeError, BudgetExceededError
from kauffman_identities.semigroups.finite import FiniteMonoid, substitution_count
from kauffman_identities.words import Identity, Letter, content, delete_letters, factor_counts

logger = logging.getLogger(__name__)

DEFAULT_MAX_LETTERS = 16
DEFAULT_MONOID_BUDGET = 20_000_000
BATCH_SIZE = 1 << 16


def _proper_subsets(alphabet: list[Letter]) -> Iterator[frozenset[Letter]]:
    """Proper subsets by size, then sorted names."""
    ordered = sorted(alphabet)
    for size in range(len(ordered)):
        for combo in itertools.combinations(ordered, size):
            yield frozenset(combo)


def _residue_failure(identity: Identity, deleted: frozenset[Letter], mode: Mode) -> Condition | None:
    u = delete_letters(identity.lhs, deleted)
    v = delete_letters(identity.rhs, deleted)
    if u.letters[0] is not v.letters[0]:
        return Condition.FIRST
    if u.letters[-1] is not v.letters[-1]:
        return Condition.LAST
    u_counts, v_counts = factor_counts(u), factor_counts(v)
    if mode is Mode.COUNTS:
        if u_counts != v_counts:
            return Condition.COUNTS
    elif set(u_counts) != set(v_counts):
        return Condition.OCCURS
    return None


def oracle_all_Y(  # noqa: N802
    identity: Identity,
    mode: Mode = Mode.COUNTS,
    max_letters: int = DEFAULT_MAX_LETTERS,
    monoid: str | None = None,
) -> Verdict:
    """Check the deletion conditions literally, for every proper subset Y.

    Raises:
        AlphabetTooLargeError: If the identity has more than ``max_letters`` letters.
    """
    name = monoid or ("K4" if mode is Mode.COUNTS else "J4")
    lhs_content, rhs_content = content(identity.lhs), content(identity.rhs)
    alphabet = sorted(lhs_content | rhs_content)
    if len(alphabet) > max_letters:
        raise AlphabetTooLargeError(len(alphabet), max_letters)
    if lhs_content != rhs_content:
        return Verdict.failing(name, FailingSubset(frozenset(), Condition.CONTENT))
    for deleted in _proper_subsets(alphabet):
        condition = _residue_failure(identity, deleted, mode)
        if condition is not None:
            return Verdict.failing(name, FailingSubset(deleted, condition))
    return Verdict.holding(name)


def oracle_finite_monoid(
    identity: Identity,
    monoid: FiniteMonoid,
    budget: int = DEFAULT_MONOID_BUDGET,
) -> Verdict:
    """Try every substitution into a finite monoid, in lexicographic order.

    Letters are ordered by name and elements by index, so the first witness
    found does not depend on batching.

    Raises:
        BudgetExceededError: If there are more substitutions than ``budget``.
    """
    alphabet = sorted(identity.content)
    total = substitution_count(monoid.size, alphabet)
    if total > budget:
        raise BudgetExceededError(total, budget)

    columns = {letter: k for k, letter in enumerate(alphabet)}
    k = len(alphabet)
    powers = np.array([monoid.size ** (k - 1 - c) for c in range(k)], dtype=np.int64)
    for start in range(0, total, BATCH_SIZE):
        index = np.arange(start, min(start + BATCH_SIZE, total), dtype=np.int64)
        assignments = (index[:, None] // powers[None, :]) % monoid.size
        lhs = monoid.evaluate_batch(identity.lhs, columns, assignments)
        rhs = monoid.evaluate_batch(identity.rhs, columns, assignments)
        differing = np.flatnonzero(lhs != rhs)
        if differing.size:
            row = int(differing[0])
            witness = SubstitutionWitness(
                tuple((letter.name, monoid.format(int(assignments[row, columns[letter]]))) for letter in alphabet),
                monoid.format(int(lhs[row])),
                monoid.format(int(rhs[row])),
            )
            return Verdict.refuted(monoid.name, witness)
    logger.debug("Exhausted substitutions", extra={"monoid": monoid.name, "substitutions": total})
    return Verdict.holding(monoid.name)
