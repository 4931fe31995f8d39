# Copyright 2025 Altaira Labs
# SPDX-License-Identifier: Apache-2.0

"""Tests for wire diagrams and their multiplication."""

import pytest
from hypothesis import given

from kauffman_identities.diagrams.wire import (
    Point,
    WireDiagram,
    WireKind,
    circle_gen,
    classify_wire,
    erase,
    from_mapping,
    hook,
    identity_diagram,
    is_planar,
    make_diagram,
    multiply,
    t_wire_count,
    to_literal,
    wire_counts,
)
from kauffman_identities.errors import (
    BadRankError,
    GeneratorIndexError,
    NotPerfectMatchingError,
    PointOutOfRangeError,
    RankMismatchError,
    WireNotFoundError,
)

from .conftest import wire_diagrams


class TestPoint:
    """Tests for boundary points."""

    def test_coerce(self) -> None:
        """Test integers and strings become left or right points."""
        assert Point.coerce(3) == Point.left(3)
        assert Point.coerce("3") == Point.left(3)
        assert Point.coerce("3'") == Point.right(3)

    def test_code_round_trip(self) -> None:
        """Test point codes for a rank-4 diagram."""
        assert Point.left(1).code(4) == 0
        assert Point.right(1).code(4) == 4
        assert Point.from_code(7, 4) == Point.right(4)

    def test_out_of_range(self) -> None:
        """Test indices outside the rank are rejected."""
        with pytest.raises(PointOutOfRangeError):
            Point.left(5).code(4)


class TestMakeDiagram:
    """Tests for diagram construction and validation."""

    def test_rank_too_small(self) -> None:
        """Test rank 1 is rejected."""
        with pytest.raises(BadRankError):
            make_diagram(1, [(1, "1'")])

    def test_point_used_twice(self) -> None:
        """Test a point may only be wired once."""
        with pytest.raises(NotPerfectMatchingError) as exc_info:
            make_diagram(2, [(1, 2), (2, "1'"), ("1'", "2'")])
        assert exc_info.value.point == "2"

    def test_point_missing(self) -> None:
        """Test every point must be wired."""
        with pytest.raises(NotPerfectMatchingError) as exc_info:
            make_diagram(2, [(1, 2)])
        assert exc_info.value.point == "1'"

    def test_crossing_counts(self, crossing_diagram: WireDiagram) -> None:
        """Test wire counts of the rank-9 example."""
        counts = wire_counts(crossing_diagram)
        assert counts[WireKind.T_WIRE] == 3
        assert counts[WireKind.L_WIRE] == 3
        assert counts[WireKind.R_WIRE] == 3
        assert t_wire_count(crossing_diagram) == 3
        assert not is_planar(crossing_diagram)

    def test_classify_wire(self, crossing_diagram: WireDiagram) -> None:
        """Test wire classification and missing wires."""
        assert classify_wire(crossing_diagram, (1, "5'")) is WireKind.T_WIRE
        assert classify_wire(crossing_diagram, ("6'", "7'")) is WireKind.R_WIRE
        assert classify_wire(crossing_diagram, (2, 4)) is WireKind.L_WIRE
        with pytest.raises(WireNotFoundError):
            classify_wire(crossing_diagram, (1, 2))

    def test_partner(self, crossing_diagram: WireDiagram) -> None:
        """Test partner lookup works from either end."""
        assert crossing_diagram.partner("9'") == Point.left(6)
        assert crossing_diagram.partner(6) == Point.right(9)


class TestMultiply:
    """Tests for diagram multiplication."""

    def test_glued_product(self, crossing_diagram: WireDiagram, planar_right: WireDiagram) -> None:
        """Test the rank-9 product: composite wires and five circles."""
        product = crossing_diagram * planar_right
        assert classify_wire(product, (1, "3'")) is WireKind.T_WIRE
        assert classify_wire(product, (6, 8)) is WireKind.L_WIRE
        assert product.circles == 5
        assert is_planar(planar_right)

    def test_rank_mismatch(self) -> None:
        """Test diagrams of different ranks cannot be multiplied."""
        with pytest.raises(RankMismatchError):
            multiply(hook(3, 1), hook(4, 1))

    def test_hook_relations(self) -> None:
        """Test h_i h_i = c h_i and h_i h_{i+1} h_i = h_i in W_5."""
        for i in range(1, 5):
            assert hook(5, i) * hook(5, i) == circle_gen(5) * hook(5, i)
        for i in range(1, 4):
            assert hook(5, i) * hook(5, i + 1) * hook(5, i) == hook(5, i)
            assert hook(5, i + 1) * hook(5, i) * hook(5, i + 1) == hook(5, i + 1)

    def test_each_loop_counted_once(self) -> None:
        """Test every closed loop adds exactly one circle."""
        assert (hook(4, 1) * hook(4, 1)).circles == 1
        h1h3 = hook(4, 1) * hook(4, 3)
        assert h1h3.circles == 0
        assert (h1h3 * h1h3).circles == 2
        nested = make_diagram(4, [(1, 2), (3, 4), ("2'", "3'"), ("1'", "4'")])
        product = nested * h1h3
        assert product.circles == 1
        assert erase(product) == h1h3

    def test_distant_hooks_commute(self) -> None:
        """Test h_i h_j = h_j h_i when |i - j| >= 2."""
        assert hook(5, 1) * hook(5, 3) == hook(5, 3) * hook(5, 1)
        assert hook(5, 1) * hook(5, 4) == hook(5, 4) * hook(5, 1)

    def test_hook_index(self) -> None:
        """Test hook indices must lie in [1, n-1]."""
        with pytest.raises(GeneratorIndexError):
            hook(4, 4)

    @given(wire_diagrams(), wire_diagrams(), wire_diagrams())
    def test_associative(self, a: WireDiagram, b: WireDiagram, c: WireDiagram) -> None:
        """Test multiplication is associative, circles included."""
        assert (a * b) * c == a * (b * c)

    @given(wire_diagrams())
    def test_identity_neutral(self, a: WireDiagram) -> None:
        """Test the identity diagram is neutral on both sides."""
        one = identity_diagram(5)
        assert one * a == a
        assert a * one == a

    @given(wire_diagrams(), wire_diagrams())
    def test_planar_closed(self, a: WireDiagram, b: WireDiagram) -> None:
        """Test products of planar diagrams are planar."""
        if is_planar(a) and is_planar(b):
            assert is_planar(a * b)

    @given(wire_diagrams(), wire_diagrams())
    def test_erase_homomorphism(self, a: WireDiagram, b: WireDiagram) -> None:
        """Test erasing circles commutes with multiplication up to new circles."""
        assert erase(a * b) == erase(erase(a) * erase(b))


class TestLiteral:
    """Tests for the diagram literal format."""

    def test_hook_literal(self) -> None:
        """Test the literal text of h1 in rank 3."""
        assert to_literal(hook(3, 1)) == "{n: 3, pairs: [[1, 2], [3, \"3'\"], [\"1'\", \"2'\"]], circles: 0}"

    def test_from_mapping(self) -> None:
        """Test building a diagram from a parsed mapping."""
        data = {"n": 3, "pairs": [[1, 2], [3, "3'"], ["1'", "2'"]], "circles": 2}
        assert from_mapping(data) == multiply(circle_gen(3) * circle_gen(3), hook(3, 1))

    @given(wire_diagrams())
    def test_str_is_literal(self, a: WireDiagram) -> None:
        """Test str() produces the literal."""
        assert str(a) == to_literal(a)
