# Copyright 2025 Altaira Labs
# SPDX-License-Identifier: Apache-2.0

"""Word fingerprints for the polynomial identity checkers.

A cut pair (x, y, B) records positions i < j holding x and y such that
neither x nor y occurs strictly between them; B is the set of distinct
letters strictly between. For every Y avoiding x and y, the number of
occurrences of the factor xy in w with the letters of Y deleted equals the
number of cut pairs (x, y, B) with B a subset of Y. Inverting that subset
sum shows that equal cut-pair multisets are exactly equal factor counts for
all deletions.

Between-sets are stored as bit masks over letter ids.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterator
from dataclasses import dataclass

from kauffman_identities.words import Letter, WordLike

CutKey = tuple[int, int, int]


@dataclass(frozen=True)
class CutPair:
    """Decoded cut pair."""

    x: Letter
    y: Letter
    between: frozenset[Letter]

    def __str__(self) -> str:
        names = ",".join(sorted(letter.name for letter in self.between))
        return f"({self.x},{self.y},{{{names}}})"


@dataclass(frozen=True)
class OccurrenceOrders:
    """Letters by first occurrence, and by last occurrence read from the end."""

    first_order: tuple[Letter, ...]
    last_order: tuple[Letter, ...]


@dataclass
class CutPairProfile:
    """Multiset of cut pairs keyed by (x id, y id, between mask)."""

    counts: Counter[CutKey]
    letters: dict[int, Letter]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CutPairProfile):
            return NotImplemented
        return self.counts == other.counts

    def multiplicity(self, x: Letter, y: Letter, between: frozenset[Letter] = frozenset()) -> int:
        return self.counts[(x.id, y.id, letters_mask(between))]

    def decode(self, mask: int) -> frozenset[Letter]:
        return frozenset(self.letters[i] for i in iter_bits(mask))

    def pairs(self) -> Counter[CutPair]:
        """Decoded multiset."""
        return Counter(
            {
                CutPair(self.letters[x], self.letters[y], self.decode(mask)): count
                for (x, y, mask), count in self.counts.items()
            }
        )

    def minimal_sets(self) -> dict[tuple[int, int], frozenset[int]]:
        """For each (x id, y id), the antichain of inclusion-minimal between masks."""
        by_pair: dict[tuple[int, int], list[int]] = {}
        for x, y, mask in self.counts:
            by_pair.setdefault((x, y), []).append(mask)
        return {pair: minimal_masks(masks) for pair, masks in by_pair.items()}


def letters_mask(letters: frozenset[Letter] | set[Letter]) -> int:
    mask = 0
    for letter in letters:
        mask |= 1 << letter.id
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def minimal_masks(masks: list[int]) -> frozenset[int]:
    """Inclusion-minimal elements of a family of masks."""
    ordered = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    kept: list[int] = []
    for mask in ordered:
        if not any(k & mask == k for k in kept):
            kept.append(mask)
    return frozenset(kept)


def occurrence_orders(w: WordLike) -> OccurrenceOrders:
    first = tuple(dict.fromkeys(w.letters))
    last = tuple(dict.fromkeys(reversed(w.letters)))
    return OccurrenceOrders(first, last)


def profile(w: WordLike) -> tuple[OccurrenceOrders, CutPairProfile]:
    """Occurrence orders and cut-pair multiset in O(n k) for k distinct letters.

    Scanning right to left, the letters seen so far are kept ordered by their
    next occurrence. The partners of position i are exactly the prefix of that
    list up to and including the next occurrence of w[i].
    """
    seq = w.letters
    counts: Counter[CutKey] = Counter()
    upcoming: list[int] = []
    for i in range(len(seq) - 1, -1, -1):
        x = seq[i].id
        between = 0
        for y in upcoming:
            counts[(x, y, between)] += 1
            if y == x:
                break
            between |= 1 << y
        if x in upcoming:
            upcoming.remove(x)
        upcoming.insert(0, x)
    letters = {letter.id: letter for letter in seq}
    return occurrence_orders(w), CutPairProfile(counts, letters)


def profile_reference(w: WordLike) -> tuple[OccurrenceOrders, CutPairProfile]:
    """Definitional quadratic enumeration over position pairs."""
    seq = w.letters
    counts: Counter[CutKey] = Counter()
    for i, x in enumerate(seq):
        seen: set[Letter] = set()
        for y in seq[i + 1 :]:
            if y not in seen:
                counts[(x.id, y.id, letters_mask(seen))] += 1
            if y is x:
                break
            seen.add(y)
    letters = {letter.id: letter for letter in seq}
    return occurrence_orders(w), CutPairProfile(counts, letters)
