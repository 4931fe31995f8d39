# Copyright 2025 Altaira Labs
# SPDX-License-Identifier: Apache-2.0

"""Shared fixtures and hypothesis strategies."""

from __future__ import annotations

import pytest
from hypothesis import strategies as st

from kauffman_identities.diagrams.jones import JonesElement, enumerate_jones, flat_ideal
from kauffman_identities.diagrams.kauffman import ExtKauffmanElement
from kauffman_identities.diagrams.wire import WireDiagram, make_diagram
from kauffman_identities.words import Identity, Word

ALPHABET = "xyzt"


def words(alphabet: str = ALPHABET, max_size: int = 10) -> st.SearchStrategy[Word]:
    """Nonempty words over a small alphabet."""
    return st.text(alphabet=alphabet, min_size=1, max_size=max_size).map(Word.of)


def identities(alphabet: str = ALPHABET, max_size: int = 10) -> st.SearchStrategy[Identity]:
    return st.builds(Identity, words(alphabet, max_size), words(alphabet, max_size))


def balanced_identities(alphabet: str = ALPHABET, max_size: int = 10) -> st.SearchStrategy[Identity]:
    """Identities whose right side rearranges the left side."""
    return words(alphabet, max_size).flatmap(
        lambda w: st.permutations(w.letters).map(lambda p: Identity(w, Word(tuple(p))))
    )


@st.composite
def wire_diagrams(draw: st.DrawFn, rank: int = 5, max_circles: int = 3) -> WireDiagram:
    """Arbitrary (usually non-planar) diagrams of a fixed rank."""
    points: list[int | str] = [*range(1, rank + 1), *(f"{i}'" for i in range(1, rank + 1))]
    order = draw(st.permutations(points))
    pairs = [(order[k], order[k + 1]) for k in range(0, len(order), 2)]
    return make_diagram(rank, pairs, draw(st.integers(0, max_circles)))


def jones_elements(n: int) -> st.SearchStrategy[JonesElement]:
    return st.sampled_from(enumerate_jones(n))


def flat_k4_elements(circles: int = 3) -> st.SearchStrategy[ExtKauffmanElement]:
    return st.builds(ExtKauffmanElement, st.sampled_from(flat_ideal(4)), st.integers(-circles, circles))


@pytest.fixture
def crossing_diagram() -> WireDiagram:
    """Non-planar rank-9 diagram with three t-wires and three circles."""
    return make_diagram(
        9,
        [(1, "5'"), (2, 4), (3, 5), (6, "9'"), (7, 9), (8, "8'"), ("1'", "2'"), ("3'", "4'"), ("6'", "7'")],
        circles=3,
    )


@pytest.fixture
def planar_right() -> WireDiagram:
    """Planar rank-9 diagram with one t-wire and one circle."""
    return make_diagram(
        9,
        [(7, "3'"), (1, 2), (3, 6), (4, 5), (8, 9), ("1'", "2'"), ("5'", "6'"), ("7'", "8'"), ("4'", "9'")],
        circles=1,
    )
