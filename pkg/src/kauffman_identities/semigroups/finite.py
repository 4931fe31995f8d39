# Copyright 2025 Altaira Labs
# SPDX-License-Identifier: Apache-2.0

"""Finite monoids given by a Cayley table over element indices."""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable, Iterator, Sequence
from typing import TypeVar

import numpy as np

from kauffman_identities.diagrams.jones import DEFAULT_MAX_RANK, jones_monoid
from kauffman_identities.semigroups.base import Semigroup
from kauffman_identities.words import Letter, WordLike

logger = logging.getLogger(__name__)

T = TypeVar("T")


class FiniteMonoid(Semigroup[int]):
    """A finite semigroup whose elements are the indices 0..size-1."""

    def __init__(self, name: str, table: np.ndarray, labels: Sequence[str] | None = None):
        """Wrap a Cayley table.

        Args:
            name: Display name.
            table: Square integer array, ``table[i, j]`` the index of ij.
            labels: Optional display label per element.

        Raises:
            ValueError: If the table is not square or has out-of-range entries.
        """
        table = np.asarray(table, dtype=np.int32)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise ValueError(f"Cayley table must be a nonempty square array, got shape {table.shape}")
        size = table.shape[0]
        if table.min() < 0 or table.max() >= size:
            raise ValueError("Cayley table entries must be element indices")
        self._name = name
        self.table = table
        self.labels = list(labels) if labels is not None else [str(i) for i in range(size)]

    @classmethod
    def from_elements(
        cls,
        name: str,
        elements: Sequence[T],
        multiply: Callable[[T, T], T],
        label: Callable[[T], str] = str,
    ) -> FiniteMonoid:
        """Tabulate a multiplication closed on the given elements.

        Raises:
            KeyError: If a product falls outside the element list.
        """
        index = {x: i for i, x in enumerate(elements)}
        size = len(elements)
        table = np.empty((size, size), dtype=np.int32)
        for i, a in enumerate(elements):
            for j, b in enumerate(elements):
                table[i, j] = index[multiply(a, b)]
        return cls(name, table, [label(x) for x in elements])

    @classmethod
    def jones(cls, n: int, max_rank: int = DEFAULT_MAX_RANK) -> FiniteMonoid:
        """J_n with elements labelled by shortest hook words."""
        monoid = jones_monoid(n, max_rank)
        prod, _ = monoid.table
        return cls(f"J{n}", prod, monoid.names)

    @classmethod
    def trivial(cls) -> FiniteMonoid:
        return cls("1", np.zeros((1, 1), dtype=np.int32), ["e"])

    @property
    def name(self) -> str:
        return self._name

    @property
    def size(self) -> int:
        return int(self.table.shape[0])

    def __len__(self) -> int:
        return self.size

    def multiply(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def elements(self) -> Iterator[int]:
        return iter(range(self.size))

    def format(self, x: int) -> str:
        return self.labels[x]

    def evaluate_batch(self, w: WordLike, columns: dict[Letter, int], assignments: np.ndarray) -> np.ndarray:
        """Evaluate a word under many substitutions at once.

        Args:
            w: Nonempty word.
            columns: Column of ``assignments`` holding each letter's image.
            assignments: Integer array of shape (batch, letters).

        Returns:
            Array of shape (batch,) with the value index of w per row.
        """
        seq = w.letters
        result = assignments[:, columns[seq[0]]]
        for letter in seq[1:]:
            result = self.table[result, assignments[:, columns[letter]]]
        return result

    def is_associative(self) -> bool:
        """Light's check over all triples, vectorised per left factor."""
        t = self.table
        for a in range(self.size):
            left = t[t[a, :], :]
            right = t[a, t]
            if not np.array_equal(left, right):
                return False
        return True

    def identity(self) -> int | None:
        """Index of the two-sided neutral element, if any."""
        arange = np.arange(self.size)
        for e in range(self.size):
            if np.array_equal(self.table[e, :], arange) and np.array_equal(self.table[:, e], arange):
                return e
        return None


def substitution_count(size: int, letters: Iterable[Letter]) -> int:
    """Number of substitutions of ``size`` elements for the given letters."""
    return int(size) ** len(set(letters))
