# Copyright 2025 Altaira Labs
# SPDX-License-Identifier: Apache-2.0

"""Jones monoids J_n: circle-free planar diagrams.

The product of two Jones elements is the erased wire product; the number of
circles erased on the way is reported alongside it because the Kauffman
coordinates need it.
"""

from __future__ import annotations

import logging
import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from kauffman_identities.diagrams.wire import (
    MIN_RANK,
    WireDiagram,
    WireKind,
    erase,
    hook,
    identity_diagram,
    is_planar,
    multiply,
    t_wire_count,
)
from kauffman_identities.errors import (
    BadRankError,
    DiagramError,
    EnumerationBoundError,
    GeneratorIndexError,
    OddRankError,
    RankMismatchError,
    TooManyTWiresError,
)

logger = logging.getLogger(__name__)

DEFAULT_MAX_RANK = 8
IDENTITY_NAME = "id"

_HOOK_WORD = re.compile(r"(?:h\d+)+")
_HOOK = re.compile(r"h(\d+)")


@dataclass(frozen=True)
class JonesElement:
    """A circle-free planar diagram."""

    diagram: WireDiagram

    def __post_init__(self) -> None:
        if self.diagram.circles:
            raise DiagramError("Jones elements carry no circles")
        if not is_planar(self.diagram):
            raise DiagramError("Jones elements must be planar")

    @property
    def rank(self) -> int:
        return self.diagram.rank

    @property
    def t_wires(self) -> int:
        return t_wire_count(self.diagram)

    def l_wires(self) -> list[tuple[int, int]]:
        """Left arcs as (i, j) index pairs, i < j."""
        return [(p.index, q.index) for (p, q), kind in self.diagram.wires() if kind is WireKind.L_WIRE]

    def r_wires(self) -> list[tuple[int, int]]:
        """Right arcs as (i, j) index pairs of primed points, i < j."""
        return [(p.index, q.index) for (p, q), kind in self.diagram.wires() if kind is WireKind.R_WIRE]

    def __mul__(self, other: JonesElement) -> JonesElement:
        return jmultiply(self, other).result

    def __str__(self) -> str:
        return str(self.diagram)


@dataclass(frozen=True)
class JonesProduct:
    """Erased product together with the number of circles removed."""

    result: JonesElement
    removed: int


@lru_cache(maxsize=1 << 16)
def jmultiply(a: JonesElement, b: JonesElement) -> JonesProduct:
    """Multiply in J_n, counting the circles the erasure removes.

    Raises:
        RankMismatchError: If the ranks differ.
    """
    if a.rank != b.rank:
        raise RankMismatchError(a.rank, b.rank)
    product = multiply(a.diagram, b.diagram)
    return JonesProduct(JonesElement(erase(product)), product.circles)


def jones_identity(n: int) -> JonesElement:
    return JonesElement(identity_diagram(n))


def jones_hook(n: int, i: int) -> JonesElement:
    return JonesElement(hook(n, i))


def jones_from_diagram(d: WireDiagram) -> JonesElement:
    """Image of a planar diagram under the erasing homomorphism."""
    return JonesElement(erase(d))


def parse_hook_word(name: str) -> list[int]:
    """Hook indices of a name such as ``"h3h2h1"``; ``"id"`` is the empty product.

    Raises:
        GeneratorIndexError: If the name is not a hook word.
    """
    text = name.strip()
    if text == IDENTITY_NAME:
        return []
    if not _HOOK_WORD.fullmatch(text):
        raise GeneratorIndexError(f"Not a hook word: '{name}'")
    return [int(m) for m in _HOOK.findall(text)]


def jones_element(n: int, name: str) -> JonesElement:
    """Evaluate a hook word such as ``"h2h1h3h2"`` in J_n."""
    result = jones_identity(n)
    for i in parse_hook_word(name):
        result = result * jones_hook(n, i)
    return result


def j4_named(name: str) -> JonesElement:
    """Element of J_4 by its hook-word label."""
    return jones_element(4, name)


def catalan(n: int) -> int:
    """n-th Catalan number, the order of J_n."""
    value = 1
    for k in range(n):
        value = value * 2 * (2 * k + 1) // (k + 2)
    return value


class JonesMonoid:
    """All elements of J_n in breadth-first generation order.

    Elements are generated from the identity by right multiplication with
    h_1, ..., h_{n-1}; the generation tree gives every element a shortest
    hook-word name.
    """

    def __init__(self, n: int, max_rank: int = DEFAULT_MAX_RANK):
        """Enumerate J_n.

        Args:
            n: Rank, at least 2.
            max_rank: Largest rank that may be enumerated.

        Raises:
            EnumerationBoundError: If n exceeds max_rank.
        """
        if n < MIN_RANK:
            raise DiagramError(f"Rank must be at least {MIN_RANK}, got {n}")
        if n > max_rank:
            raise EnumerationBoundError(n, max_rank)
        self.rank = n
        self.generators = [jones_hook(n, i) for i in range(1, n)]

        identity = jones_identity(n)
        self.elements: list[JonesElement] = [identity]
        self.names: list[str] = [IDENTITY_NAME]
        self._index: dict[JonesElement, int] = {identity: 0}

        frontier: deque[int] = deque([0])
        while frontier:
            current = frontier.popleft()
            prefix = "" if current == 0 else self.names[current]
            for i, gen in enumerate(self.generators, start=1):
                product = self.elements[current] * gen
                if product not in self._index:
                    self._index[product] = len(self.elements)
                    self.elements.append(product)
                    self.names.append(f"{prefix}h{i}")
                    frontier.append(len(self.elements) - 1)

        logger.info("Enumerated Jones monoid", extra={"rank": n, "size": len(self.elements)})

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self._index

    def index(self, x: JonesElement) -> int:
        """Position of x in generation order.

        Raises:
            KeyError: If x is not an element of this monoid.
        """
        return self._index[x]

    def name(self, x: JonesElement) -> str:
        """Shortest hook-word name (``"id"`` for the identity)."""
        return self.names[self._index[x]]

    @cached_property
    def table(self) -> tuple[np.ndarray, np.ndarray]:
        """Cayley table as (product index, removed circles) integer arrays."""
        size = len(self.elements)
        prod = np.empty((size, size), dtype=np.int32)
        removed = np.empty((size, size), dtype=np.int32)
        for i, a in enumerate(self.elements):
            for j, b in enumerate(self.elements):
                p = jmultiply(a, b)
                prod[i, j] = self._index[p.result]
                removed[i, j] = p.removed
        logger.info("Built Jones Cayley table", extra={"rank": self.rank, "size": size})
        return prod, removed


@lru_cache(maxsize=None)
def jones_monoid(n: int, max_rank: int = DEFAULT_MAX_RANK) -> JonesMonoid:
    """Shared enumerated J_n."""
    return JonesMonoid(n, max_rank)


def enumerate_jones(n: int, max_rank: int = DEFAULT_MAX_RANK) -> list[JonesElement]:
    """Closure of the identity and the hooks under multiplication.

    Raises:
        EnumerationBoundError: If n exceeds max_rank.
    """
    return list(jones_monoid(n, max_rank).elements)


def flat_ideal(n: int, max_rank: int = DEFAULT_MAX_RANK) -> list[JonesElement]:
    """Elements with at most two t-wires."""
    return [x for x in jones_monoid(n, max_rank).elements if x.t_wires <= 2]


def cut_j(x: JonesElement) -> JonesElement:
    """Replace the two t-wires by an l-wire and an r-wire.

    Diagrams without t-wires are fixed.

    Raises:
        BadRankError: If the rank is below 4.
        OddRankError: If the rank is odd.
        TooManyTWiresError: If x has more than two t-wires.
    """
    n = x.rank
    if n < 4:
        raise BadRankError(n, minimum=4)
    if n % 2:
        raise OddRankError(n)
    count = x.t_wires
    if count == 0:
        return x
    if count > 2:
        raise TooManyTWiresError(count)

    mate = list(x.diagram.mate)
    lefts = [p for p in range(n) if mate[p] >= n]
    a, b = lefts
    ra, rb = mate[a], mate[b]
    mate[a], mate[b] = b, a
    mate[ra], mate[rb] = rb, ra
    return JonesElement(WireDiagram(n, tuple(mate), 0))


def matches(g: JonesElement, d: JonesElement) -> bool:
    """True if every r-wire {i', j'} of g appears as the l-wire {i, j} of d.

    Raises:
        RankMismatchError: If the ranks differ.
    """
    if g.rank != d.rank:
        raise RankMismatchError(g.rank, d.rank)
    n = g.rank
    gm, dm = g.diagram.mate, d.diagram.mate
    for p in range(n, 2 * n):
        q = gm[p]
        if q >= n and dm[p - n] != q - n:
            return False
    return True


@dataclass(frozen=True)
class GridPosition:
    """Cell of a J_4 flat-ideal element in the grid pictures.

    Two-t-wire elements sit in a 3x3 grid, t-wire-free ones in a 2x2 grid.
    """

    grid: int
    row: int
    column: int


# Left arcs (and, primed, right arcs) of two-t-wire J_4 elements, by grid row.
_ARC_ROW = {(3, 4): 1, (2, 3): 2, (1, 2): 3}
# Arc pairs of t-wire-free J_4 elements: parallel first, nested second.
_ARC_PAIR_ROW = {((1, 2), (3, 4)): 1, ((1, 4), (2, 3)): 2}


def j4_layout(x: JonesElement) -> GridPosition:
    """Grid position of an element of the flat ideal of J_4.

    Raises:
        DiagramError: If x is not a J_4 element with at most two t-wires.
    """
    if x.rank != 4:
        raise RankMismatchError(x.rank, 4)
    left, right = x.l_wires(), x.r_wires()
    if x.t_wires == 2:
        return GridPosition(3, _ARC_ROW[left[0]], _ARC_ROW[right[0]])
    if x.t_wires == 0:
        return GridPosition(2, _ARC_PAIR_ROW[tuple(left)], _ARC_PAIR_ROW[tuple(right)])
    raise TooManyTWiresError(x.t_wires)

