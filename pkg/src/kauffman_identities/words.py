# Copyright 2025 Altaira Labs
# SPDX-License-Identifier: Apache-2.0

"""Letters, words and identities, with the word statistics the checkers use."""

from __future__ import annotations

import threading
from collections import Counter
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from typing import ClassVar

from kauffman_identities.errors import WordError


class Letter:
    """An interned alphabet symbol.

    Two letters with the same name are the same object, so content sets and
    profiles hash and compare by a small integer id. Letters are ordered by
    name, which makes witness selection reproducible.
    """

    __slots__ = ("name", "id")

    _registry: ClassVar[dict[str, Letter]] = {}
    _lock: ClassVar[threading.Lock] = threading.Lock()

    name: str
    id: int

    def __new__(cls, name: str) -> Letter:
        existing = cls._registry.get(name)
        if existing is not None:
            return existing
        if not name:
            raise WordError("Letter name must be nonempty")
        with cls._lock:
            existing = cls._registry.get(name)
            if existing is None:
                existing = super().__new__(cls)
                existing.name = name
                existing.id = len(cls._registry)
                cls._registry[name] = existing
        return existing

    def __reduce__(self) -> tuple[type[Letter], tuple[str]]:
        return (Letter, (self.name,))

    def __lt__(self, other: Letter) -> bool:
        return self.name < other.name

    def __le__(self, other: Letter) -> bool:
        return self.name <= other.name

    def __hash__(self) -> int:
        return self.id

    def __repr__(self) -> str:
        return f"Letter({self.name!r})"

    def __str__(self) -> str:
        return self.name


def letters(names: Iterable[str]) -> tuple[Letter, ...]:
    """Intern a sequence of letter names."""
    return tuple(Letter(name) for name in names)


class _LetterSequence:
    """Shared behaviour of words and deletion residues."""

    letters: tuple[Letter, ...]

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, index: int) -> Letter:
        return self.letters[index]

    def __str__(self) -> str:
        return "".join(letter.name for letter in self.letters)


@dataclass(frozen=True, eq=True)
class Word(_LetterSequence):
    """A nonempty word over the alphabet (an element of X+)."""

    letters: tuple[Letter, ...]

    def __post_init__(self) -> None:
        if not self.letters:
            raise WordError("A word must contain at least one letter")

    @classmethod
    def of(cls, names: Iterable[str]) -> Word:
        """Build a word from letter names."""
        return cls(letters(names))


@dataclass(frozen=True, eq=True)
class MaybeEmptyWord(_LetterSequence):
    """Result of deleting letters from a word; may be empty."""

    letters: tuple[Letter, ...] = ()

    @property
    def is_empty(self) -> bool:
        return not self.letters

    def to_word(self) -> Word:
        """Convert to a nonempty word.

        Raises:
            WordError: If the residue is empty.
        """
        return Word(self.letters)


WordLike = Word | MaybeEmptyWord


@dataclass(frozen=True)
class Identity:
    """A formal equation lhs = rhs between two words."""

    lhs: Word
    rhs: Word

    @property
    def content(self) -> frozenset[Letter]:
        """Letters occurring on either side."""
        return content(self.lhs) | content(self.rhs)

    @property
    def sides(self) -> tuple[Word, Word]:
        return (self.lhs, self.rhs)

    def __str__(self) -> str:
        return f"{self.lhs} = {self.rhs}"


def content(w: WordLike) -> frozenset[Letter]:
    """Set of distinct letters of a word."""
    return frozenset(w.letters)


def occurrences(x: Letter, w: WordLike) -> int:
    """Number of occurrences of a single letter."""
    return w.letters.count(x)


def occ_factor(v: Sequence[Letter] | WordLike, w: WordLike) -> int:
    """Count (possibly overlapping) occurrences of a factor of length 1 or 2.

    Raises:
        WordError: If the factor is empty or longer than two letters.
    """
    factor = tuple(v.letters) if isinstance(v, Word | MaybeEmptyWord) else tuple(v)
    if len(factor) == 1:
        return w.letters.count(factor[0])
    if len(factor) == 2:
        first, second = factor
        seq = w.letters
        return sum(1 for i in range(len(seq) - 1) if seq[i] is first and seq[i + 1] is second)
    raise WordError(f"Only factors of length 1 or 2 are supported, got length {len(factor)}")


def factor_counts(w: WordLike) -> Counter[tuple[Letter, Letter]]:
    """Occurrence counts of every length-2 factor."""
    seq = w.letters
    return Counter(zip(seq, seq[1:]))


def delete_letters(w: WordLike, removed: Iterable[Letter]) -> MaybeEmptyWord:
    """Remove every occurrence of the given letters, keeping the order of the rest."""
    drop = frozenset(removed)
    return MaybeEmptyWord(tuple(letter for letter in w.letters if letter not in drop))


def is_balanced(identity: Identity) -> bool:
    """True if every letter occurs equally often on both sides."""
    return Counter(identity.lhs.letters) == Counter(identity.rhs.letters)


def first_last(w: WordLike) -> tuple[Letter, Letter]:
    """First and last letter.

    Raises:
        WordError: If the word is empty.
    """
    if not w.letters:
        raise WordError("The empty word has no first or last letter")
    return w.letters[0], w.letters[-1]
