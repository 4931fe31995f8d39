# Copyright 2025 Altaira Labs
# SPDX-License-Identifier: Apache-2.0

"""Wire diagrams: perfect matchings on 2n boundary points plus a circle count.

Points are encoded internally as integers: the left point ``i`` is ``i - 1``
and the right point ``i'`` is ``n + i - 1``. A diagram stores its matching as
the ``mate`` tuple (``mate[p]`` is the point wired to ``p``), which doubles as
the canonical form for equality and hashing.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, replace
from enum import Enum
from typing import Any

from kauffman_identities.errors import (
    BadRankError,
    DiagramError,
    GeneratorIndexError,
    NotPerfectMatchingError,
    PointOutOfRangeError,
    RankMismatchError,
    WireNotFoundError,
)

MIN_RANK = 2


class Side(str, Enum):
    """Side of the diagram a boundary point sits on."""

    LEFT = "left"
    RIGHT = "right"


class WireKind(str, Enum):
    """Classification of a wire by the sides of its endpoints."""

    L_WIRE = "l"
    R_WIRE = "r"
    T_WIRE = "t"


@dataclass(frozen=True)
class Point:
    """A boundary point: left ``i`` or right ``i'``."""

    side: Side
    index: int

    @classmethod
    def left(cls, index: int) -> Point:
        return cls(Side.LEFT, index)

    @classmethod
    def right(cls, index: int) -> Point:
        return cls(Side.RIGHT, index)

    @classmethod
    def coerce(cls, value: Point | int | str) -> Point:
        """Build a point from ``3`` / ``"3"`` (left) or ``"3'"`` (right)."""
        if isinstance(value, Point):
            return value
        if isinstance(value, bool):
            raise DiagramError(f"Invalid point: {value!r}")
        if isinstance(value, int):
            return cls.left(value)
        text = str(value).strip()
        side = Side.LEFT
        if text.endswith("'"):
            side = Side.RIGHT
            text = text[:-1]
        if not text.isdigit():
            raise DiagramError(f"Invalid point: {value!r}")
        return cls(side, int(text))

    def code(self, rank: int) -> int:
        """Internal integer code of the point in a diagram of the given rank."""
        if not 1 <= self.index <= rank:
            raise PointOutOfRangeError(f"Point {self} outside [1, {rank}]")
        return self.index - 1 if self.side is Side.LEFT else rank + self.index - 1

    @classmethod
    def from_code(cls, code: int, rank: int) -> Point:
        if code < rank:
            return cls.left(code + 1)
        return cls.right(code - rank + 1)

    def __str__(self) -> str:
        return f"{self.index}'" if self.side is Side.RIGHT else str(self.index)


PointLike = Point | int | str
Pair = tuple[Point, Point]


@dataclass(frozen=True)
class WireDiagram:
    """An element of the wire monoid W_n."""

    rank: int
    mate: tuple[int, ...]
    circles: int = 0

    def __mul__(self, other: WireDiagram) -> WireDiagram:
        return multiply(self, other)

    @property
    def pairs(self) -> list[Pair]:
        """Canonical pair list: left before right, ascending index."""
        n = self.rank
        return [
            (Point.from_code(p, n), Point.from_code(q, n))
            for p, q in enumerate(self.mate)
            if p < q
        ]

    def wires(self) -> Iterator[tuple[Pair, WireKind]]:
        """Iterate over wires with their kinds."""
        for pair in self.pairs:
            yield pair, _kind(pair[0], pair[1])

    def partner(self, point: PointLike) -> Point:
        """Point wired to the given point."""
        code = Point.coerce(point).code(self.rank)
        return Point.from_code(self.mate[code], self.rank)

    def __str__(self) -> str:
        return to_literal(self)


def _kind(p: Point, q: Point) -> WireKind:
    if p.side is Side.LEFT and q.side is Side.LEFT:
        return WireKind.L_WIRE
    if p.side is Side.RIGHT and q.side is Side.RIGHT:
        return WireKind.R_WIRE
    return WireKind.T_WIRE


def make_diagram(
    rank: int,
    pairs: Iterable[tuple[PointLike, PointLike]],
    circles: int = 0,
) -> WireDiagram:
    """Build a validated diagram.

    Args:
        rank: Number of points on each side (at least 2).
        pairs: Wires as pairs of points (``3``, ``"3"`` or ``"3'"``).
        circles: Nonnegative number of circles.

    Raises:
        BadRankError: If rank < 2.
        NotPerfectMatchingError: If a point is missing or used twice.
        PointOutOfRangeError: If a point index lies outside [1, rank].
    """
    if rank < MIN_RANK:
        raise BadRankError(rank, MIN_RANK)
    if circles < 0:
        raise DiagramError(f"Circle count must be nonnegative, got {circles}")

    mate = [-1] * (2 * rank)
    for raw in pairs:
        if len(raw) != 2:
            raise NotPerfectMatchingError(f"A wire joins exactly two points, got {raw!r}")
        p, q = (Point.coerce(x) for x in raw)
        cp, cq = p.code(rank), q.code(rank)
        if cp == cq:
            raise NotPerfectMatchingError(f"Point {p} wired to itself", point=str(p))
        for point, code in ((p, cp), (q, cq)):
            if mate[code] != -1:
                raise NotPerfectMatchingError(f"Point {point} used twice", point=str(point))
        mate[cp], mate[cq] = cq, cp

    missing = [Point.from_code(code, rank) for code, m in enumerate(mate) if m == -1]
    if missing:
        raise NotPerfectMatchingError(
            f"Point {missing[0]} is not wired", point=str(missing[0])
        )
    return WireDiagram(rank, tuple(mate), circles)


def multiply(a: WireDiagram, b: WireDiagram) -> WireDiagram:
    """Glue the right points of ``a`` to the left points of ``b``.

    Every maximal glued path between surviving boundary points becomes a wire
    and every closed path through the middle layer becomes one new circle.

    Raises:
        RankMismatchError: If the ranks differ.
    """
    if a.rank != b.rank:
        raise RankMismatchError(a.rank, b.rank)
    n = a.rank
    am, bm = a.mate, b.mate
    seen = [False] * n
    mate = [0] * (2 * n)

    def follow(in_b: bool, point: int) -> int:
        # Walk until a boundary point of the product is reached.
        while True:
            if not in_b:
                q = am[point]
                if q < n:
                    return q
                seen[q - n] = True
                in_b, point = True, q - n
            else:
                q = bm[point]
                if q >= n:
                    return q
                seen[q] = True
                in_b, point = False, q + n

    for p in range(n):
        mate[p] = follow(False, p)
    for p in range(n, 2 * n):
        mate[p] = follow(True, p)

    # Unvisited middle points lie on cycles of r-wires of a and l-wires of b.
    cycles = 0
    for start in range(n):
        if seen[start]:
            continue
        cycles += 1
        cur = start
        while not seen[cur]:
            # Each step crosses one l-wire of b and one r-wire of a.
            seen[cur] = True
            mid = bm[cur]
            seen[mid] = True
            cur = am[mid + n] - n

    return WireDiagram(n, tuple(mate), a.circles + b.circles + cycles)


def classify_wire(d: WireDiagram, pair: tuple[PointLike, PointLike]) -> WireKind:
    """Kind of a wire of the diagram.

    Raises:
        WireNotFoundError: If the pair is not a wire of ``d``.
    """
    p, q = (Point.coerce(x) for x in pair)
    if d.mate[p.code(d.rank)] != q.code(d.rank):
        raise WireNotFoundError(f"{{{p}, {q}}} is not a wire of the diagram")
    return _kind(p, q)


def wire_counts(d: WireDiagram) -> Counter[WireKind]:
    """Number of wires of each kind."""
    return Counter(kind for _, kind in d.wires())


def t_wire_count(d: WireDiagram) -> int:
    """Number of t-wires."""
    n = d.rank
    return sum(1 for p in range(n) if d.mate[p] >= n)


def _circular_position(code: int, n: int) -> int:
    # Circular order L1..Ln, Rn..R1.
    return code if code < n else 3 * n - 1 - code


def is_planar(d: WireDiagram) -> bool:
    """True if no two wires interleave in the circular order L1..Ln, Rn..R1."""
    n = d.rank
    at = [0] * (2 * n)
    for code in range(2 * n):
        at[_circular_position(code, n)] = code
    stack: list[int] = []
    for pos in range(2 * n):
        partner = _circular_position(d.mate[at[pos]], n)
        if partner > pos:
            stack.append(pos)
        elif not stack or stack.pop() != partner:
            return False
    return True


def identity_diagram(n: int) -> WireDiagram:
    """The n horizontal t-wires and no circles."""
    if n < MIN_RANK:
        raise BadRankError(n, MIN_RANK)
    return WireDiagram(n, tuple(range(n, 2 * n)) + tuple(range(n)), 0)


def circle_gen(n: int) -> WireDiagram:
    """The circle c: identity wiring with one circle."""
    return replace(identity_diagram(n), circles=1)


def hook(n: int, i: int) -> WireDiagram:
    """The hook h_i: wires {i, i+1} and {i', (i+1)'}; all other points horizontal.

    Raises:
        GeneratorIndexError: If i is outside [1, n-1].
    """
    if n < MIN_RANK:
        raise BadRankError(n, MIN_RANK)
    if not 1 <= i <= n - 1:
        raise GeneratorIndexError(f"Hook index {i} outside [1, {n - 1}]")
    mate = list(identity_diagram(n).mate)
    a, b = i - 1, i
    mate[a], mate[b] = b, a
    mate[n + a], mate[n + b] = n + b, n + a
    return WireDiagram(n, tuple(mate), 0)


def erase(d: WireDiagram) -> WireDiagram:
    """Drop all circles."""
    return replace(d, circles=0) if d.circles else d


def _literal_point(point: Point) -> str:
    return f"\"{point}\"" if point.side is Side.RIGHT else str(point)


def to_literal(d: WireDiagram) -> str:
    """Diagram literal text, e.g. ``{n: 2, pairs: [[1, 2], ["1'", "2'"]], circles: 0}``."""
    pairs = ", ".join(f"[{_literal_point(p)}, {_literal_point(q)}]" for p, q in d.pairs)
    return f"{{n: {d.rank}, pairs: [{pairs}], circles: {d.circles}}}"


def from_mapping(data: Mapping[str, Any]) -> WireDiagram:
    """Build a diagram from a parsed literal mapping.

    Raises:
        DiagramError: If keys are missing or values malformed.
    """
    try:
        rank = int(data["n"])
        raw_pairs = data["pairs"]
    except (KeyError, TypeError, ValueError) as e:
        raise DiagramError("Diagram literal needs integer 'n' and a 'pairs' list") from e
    circles = data.get("circles", 0)
    if not isinstance(circles, int) or isinstance(circles, bool):
        raise DiagramError(f"Invalid circle count: {circles!r}")
    if not isinstance(raw_pairs, list):
        raise DiagramError("'pairs' must be a list of two-element lists")
    return make_diagram(rank, [tuple(pair) for pair in raw_pairs], circles)
