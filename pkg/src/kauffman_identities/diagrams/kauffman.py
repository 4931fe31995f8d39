# Copyright 2025 Altaira Labs
# SPDX-License-Identifier: Apache-2.0

"""Kauffman monoids in (Jones element, circle count) coordinates.

An element of K_n is a pair (Jones part, circles >= 0); the extended monoid
allows any integer circle count, negative values standing for negative
circles. Products follow

    (a, s) * (b, t) = (ab, s + t + removed(a, b))

where removed(a, b) counts the circles erased when forming ab in J_n.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, replace

from kauffman_identities.diagrams.jones import (
    IDENTITY_NAME,
    JonesElement,
    cut_j,
    jmultiply,
    jones_from_diagram,
    jones_hook,
    jones_identity,
    jones_monoid,
    parse_hook_word,
)
from kauffman_identities.diagrams.wire import WireDiagram, is_planar
from kauffman_identities.errors import (
    DiagramError,
    GeneratorIndexError,
    RankMismatchError,
    UnassignedLetterError,
)
from kauffman_identities.words import Letter, WordLike

CIRCLE = "c"
INVERSE_CIRCLE = "d"


@dataclass(frozen=True, eq=False)
class ExtKauffmanElement:
    """Element of the extended Kauffman monoid: Jones part and integer circles."""

    jones: JonesElement
    circles: int = 0

    @property
    def rank(self) -> int:
        return self.jones.rank

    @property
    def t_wires(self) -> int:
        return self.jones.t_wires

    def __mul__(self, other: ExtKauffmanElement) -> ExtKauffmanElement:
        return kmultiply(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExtKauffmanElement):
            return NotImplemented
        return self.jones == other.jones and self.circles == other.circles

    def __hash__(self) -> int:
        return hash((self.jones, self.circles))

    def __str__(self) -> str:
        return f"({self.jones}, {self.circles})"


@dataclass(frozen=True, eq=False)
class KauffmanElement(ExtKauffmanElement):
    """Element of K_n: the circle count is nonnegative."""

    def __post_init__(self) -> None:
        if self.circles < 0:
            raise DiagramError(f"K_n elements have nonnegative circle counts, got {self.circles}")


def kmultiply(a: ExtKauffmanElement, b: ExtKauffmanElement) -> ExtKauffmanElement:
    """Coordinate product; stays in K_n when both factors are in K_n.

    Raises:
        RankMismatchError: If the ranks differ.
    """
    if a.rank != b.rank:
        raise RankMismatchError(a.rank, b.rank)
    product = jmultiply(a.jones, b.jones)
    circles = a.circles + b.circles + product.removed
    if isinstance(a, KauffmanElement) and isinstance(b, KauffmanElement):
        return KauffmanElement(product.result, circles)
    return ExtKauffmanElement(product.result, circles)


def kauffman_identity(n: int) -> KauffmanElement:
    return KauffmanElement(jones_identity(n), 0)


def generator(n: int, name: str) -> ExtKauffmanElement:
    """Generator by name: ``c``, ``d``, ``h1`` ... ``h{n-1}`` or ``id``.

    Raises:
        GeneratorIndexError: If the name is unknown or the hook index is out of range.
    """
    if name == CIRCLE:
        return KauffmanElement(jones_identity(n), 1)
    if name == INVERSE_CIRCLE:
        return ExtKauffmanElement(jones_identity(n), -1)
    if name == IDENTITY_NAME:
        return kauffman_identity(n)
    indices = parse_hook_word(name)
    if len(indices) != 1:
        raise GeneratorIndexError(f"Unknown generator '{name}'. Must be c, d or h1..h{n - 1}")
    return KauffmanElement(jones_hook(n, indices[0]), 0)


def evaluate_generators(n: int, names: Iterable[str]) -> ExtKauffmanElement:
    """Product of generators given by name, left to right; empty means the identity."""
    result: ExtKauffmanElement = kauffman_identity(n)
    for name in names:
        result = kmultiply(result, generator(n, name))
    return result


def evaluate(w: WordLike, phi: Mapping[Letter, ExtKauffmanElement]) -> ExtKauffmanElement:
    """Image of a word under a substitution, folded left to right.

    Raises:
        UnassignedLetterError: If a letter of w has no image.
    """
    if not w.letters:
        raise DiagramError("Cannot evaluate an empty word")
    result: ExtKauffmanElement | None = None
    for letter in w.letters:
        try:
            value = phi[letter]
        except KeyError:
            raise UnassignedLetterError(letter.name) from None
        result = value if result is None else kmultiply(result, value)
    assert result is not None
    return result


def cut_k(x: ExtKauffmanElement) -> ExtKauffmanElement:
    """Cut both t-wires and add one negative circle; fixes t-wire-free elements.

    Raises:
        TooManyTWiresError: If x has more than two t-wires.
        BadRankError: If the rank is below 4.
        OddRankError: If the rank is odd.
    """
    cut = cut_j(x.jones)
    if cut is x.jones:
        return x
    return ExtKauffmanElement(cut, x.circles - 1)


def embed_k3_in_k4(x: KauffmanElement | Sequence[str]) -> KauffmanElement:
    """Map K_3 into the submonoid of K_4 generated by h1, h2 and c.

    Accepts either a rank-3 element or a generator word over c, h1, h2.

    Raises:
        GeneratorIndexError: If the word uses any other generator.
    """
    if isinstance(x, ExtKauffmanElement):
        if x.rank != 3:
            raise RankMismatchError(x.rank, 3)
        names: list[str] = [f"h{i}" for i in parse_hook_word(jones_monoid(3).name(x.jones))]
        names.extend([CIRCLE] * x.circles)
    else:
        names = list(x)
    allowed = {CIRCLE, "h1", "h2", IDENTITY_NAME}
    for name in names:
        if name not in allowed:
            raise GeneratorIndexError(f"Generator '{name}' is not in the K_3 submonoid")
    image = evaluate_generators(4, names)
    return KauffmanElement(image.jones, image.circles)


def from_diagram(d: WireDiagram) -> KauffmanElement:
    """Coordinates of a planar wire diagram.

    Raises:
        DiagramError: If d is not planar.
    """
    if not is_planar(d):
        raise DiagramError("Only planar diagrams lie in K_n")
    return KauffmanElement(jones_from_diagram(d), d.circles)


def to_diagram(x: ExtKauffmanElement) -> WireDiagram:
    """Wire diagram of an element with a nonnegative circle count.

    Raises:
        DiagramError: If the circle count is negative.
    """
    if x.circles < 0:
        raise DiagramError("Negative circles have no wire diagram")
    return replace(x.jones.diagram, circles=x.circles)


def is_unit(x: ExtKauffmanElement) -> bool:
    """True for powers of c and d (the Jones part is the identity)."""
    return x.t_wires == x.rank


def in_flat_ideal(x: ExtKauffmanElement) -> bool:
    """At most two t-wires."""
    return x.t_wires <= 2
