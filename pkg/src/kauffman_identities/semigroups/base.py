# Copyright 2025 Altaira Labs
# SPDX-License-Identifier: Apache-2.0

"""Base semigroup interface."""

from __future__ import annotations

from abc import ABC, abstractmethod
from collections.abc import Iterable, Mapping
from typing import Generic, TypeVar

from kauffman_identities.errors import UnassignedLetterError, WordError
from kauffman_identities.words import Letter, WordLike

T = TypeVar("T")


class Semigroup(ABC, Generic[T]):
    """Abstract base class for semigroups that words can be evaluated in."""

    @property
    @abstractmethod
    def name(self) -> str:
        """Short display name, e.g. ``"M3"``."""

    @abstractmethod
    def multiply(self, a: T, b: T) -> T:
        """Multiply two elements.

        Args:
            a: Left factor.
            b: Right factor.

        Returns:
            The product ab.
        """

    @abstractmethod
    def elements(self) -> Iterable[T]:
        """Iterate over the elements (or a finite slice of them)."""

    def format(self, x: T) -> str:
        """Display text of an element."""
        return str(x)

    def evaluate(self, w: WordLike, substitution: Mapping[Letter, T]) -> T:
        """Image of a word under a substitution, folded left to right.

        Args:
            w: Nonempty word.
            substitution: Letter images; must cover the content of w.

        Returns:
            The value of w.

        Raises:
            UnassignedLetterError: If a letter has no image.
        """
        if not w.letters:
            raise WordError("Cannot evaluate the empty word")
        result: T | None = None
        for letter in w.letters:
            try:
                value = substitution[letter]
            except KeyError:
                raise UnassignedLetterError(letter.name) from None
            result = value if result is None else self.multiply(result, value)
        return result  # type: ignore[return-value]
