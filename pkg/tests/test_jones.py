# Copyright 2025 Altaira Labs
# SPDX-License-Identifier: Apache-2.0

"""Tests for Jones monoids, the cutting map and the J_4 grids."""

import itertools

import pytest
from hypothesis import given

from kauffman_identities.diagrams.jones import (
    GridPosition,
    JonesElement,
    JonesMonoid,
    catalan,
    cut_j,
    enumerate_jones,
    flat_ideal,
    j4_layout,
    j4_named,
    jmultiply,
    jones_element,
    jones_identity,
    matches,
    parse_hook_word,
)
from kauffman_identities.diagrams.wire import circle_gen, hook, make_diagram
from kauffman_identities.errors import (
    BadRankError,
    DiagramError,
    EnumerationBoundError,
    GeneratorIndexError,
    OddRankError,
    TooManyTWiresError,
)

from .conftest import jones_elements


class TestJonesElement:
    """Tests for circle-free planar elements."""

    def test_rejects_circles(self) -> None:
        """Test Jones elements carry no circles."""
        with pytest.raises(DiagramError):
            JonesElement(circle_gen(3))

    def test_rejects_non_planar(self) -> None:
        """Test crossing wires are rejected."""
        crossing = make_diagram(2, [(1, "2'"), (2, "1'")])
        with pytest.raises(DiagramError):
            JonesElement(crossing)

    def test_square_removes_circle(self) -> None:
        """Test h1 h1 = h1 with one removed circle."""
        h1 = j4_named("h1")
        product = jmultiply(h1, h1)
        assert product.result == h1
        assert product.removed == 1

    def test_wires(self) -> None:
        """Test arc listing of h2 in J_4."""
        h2 = j4_named("h2")
        assert h2.l_wires() == [(2, 3)]
        assert h2.r_wires() == [(2, 3)]
        assert h2.t_wires == 2


class TestNames:
    """Tests for hook-word names."""

    def test_parse_hook_word(self) -> None:
        """Test hook indices of a name."""
        assert parse_hook_word("h2h1h3h2") == [2, 1, 3, 2]
        assert parse_hook_word("id") == []
        with pytest.raises(GeneratorIndexError):
            parse_hook_word("h2x")

    def test_names_evaluate_to_elements(self) -> None:
        """Test every BFS name of J_4 evaluates back to its element."""
        monoid = JonesMonoid(4)
        for element, name in zip(monoid.elements, monoid.names):
            assert jones_element(4, name) == element
            assert monoid.name(element) == name

    def test_j4_names(self) -> None:
        """Test the J_4 labels used in the grid pictures."""
        names = set(JonesMonoid(4).names)
        for label in ("id", "h1", "h2", "h3", "h1h3", "h3h2h1", "h1h2h3", "h2h1h3h2", "h2h1h3", "h1h3h2"):
            assert label in names


class TestEnumeration:
    """Tests for enumeration of J_n."""

    @pytest.mark.parametrize("n", range(2, 8))
    def test_catalan(self, n: int) -> None:
        """Test |J_n| is the n-th Catalan number."""
        assert len(enumerate_jones(n)) == catalan(n)

    def test_catalan_values(self) -> None:
        """Test the first Catalan numbers."""
        assert [catalan(n) for n in range(2, 8)] == [2, 5, 14, 42, 132, 429]

    def test_bound(self) -> None:
        """Test ranks above the bound are refused."""
        with pytest.raises(EnumerationBoundError):
            JonesMonoid(5, max_rank=4)

    def test_flat_ideal_size(self) -> None:
        """Test J_4 has 13 elements with at most two t-wires."""
        flat = flat_ideal(4)
        assert len(flat) == 13
        assert jones_identity(4) not in flat
        assert sum(1 for x in flat if x.t_wires == 2) == 9

    def test_table_matches_products(self) -> None:
        """Test the Cayley table agrees with direct multiplication."""
        monoid = JonesMonoid(4)
        prod, removed = monoid.table
        for i, j in itertools.product(range(len(monoid)), repeat=2):
            p = jmultiply(monoid.elements[i], monoid.elements[j])
            assert monoid.elements[prod[i, j]] == p.result
            assert removed[i, j] == p.removed

    @given(jones_elements(5), jones_elements(5), jones_elements(5))
    def test_associative(self, a: JonesElement, b: JonesElement, c: JonesElement) -> None:
        """Test associativity, including removed-circle totals."""
        assert (a * b) * c == a * (b * c)
        left = jmultiply(a, b).removed + jmultiply(a * b, c).removed
        right = jmultiply(b, c).removed + jmultiply(a, b * c).removed
        assert left == right


class TestCutJ:
    """Tests for the cutting map."""

    def test_fixes_t_wire_free(self) -> None:
        """Test elements without t-wires are fixed."""
        x = j4_named("h1h3")
        assert cut_j(x) is x

    def test_cut_h2(self) -> None:
        """Test h2 is cut to h2h1h3h2."""
        assert cut_j(j4_named("h2")) == j4_named("h2h1h3h2")

    def test_cut_corners(self) -> None:
        """Test corner cells of the 3x3 grid are cut to h1h3."""
        for name in ("h3", "h3h2h1", "h1h2h3", "h1"):
            assert cut_j(j4_named(name)) == j4_named("h1h3")

    def test_cut_edges(self) -> None:
        """Test middle-row and middle-column extremes."""
        assert cut_j(j4_named("h2h3")) == j4_named("h2h1h3")
        assert cut_j(j4_named("h2h1")) == j4_named("h2h1h3")
        assert cut_j(j4_named("h3h2")) == j4_named("h1h3h2")
        assert cut_j(j4_named("h1h2")) == j4_named("h1h3h2")

    def test_odd_rank(self) -> None:
        """Test odd ranks are refused."""
        with pytest.raises(OddRankError):
            cut_j(jones_element(5, "h1"))

    def test_rank_below_four(self) -> None:
        """Test rank 2 has no cutting map."""
        with pytest.raises(BadRankError) as exc_info:
            cut_j(jones_element(2, "h1"))
        assert exc_info.value.minimum == 4

    def test_too_many_t_wires(self) -> None:
        """Test the identity of J_4 cannot be cut."""
        with pytest.raises(TooManyTWiresError):
            cut_j(jones_identity(4))

    def test_endomorphism_j4(self) -> None:
        """Test cut_j is multiplicative on all 169 pairs of the flat ideal."""
        flat = flat_ideal(4)
        for x, y in itertools.product(flat, repeat=2):
            assert cut_j(x * y) == cut_j(x) * cut_j(y)

    def test_retract(self) -> None:
        """Test cut_j is idempotent with image the t-wire-free elements."""
        flat = flat_ideal(4)
        image = {cut_j(x) for x in flat}
        assert image == {x for x in flat if x.t_wires == 0}
        assert len(image) == 4


class TestMatches:
    """Tests for the matches relation."""

    def test_case_one(self) -> None:
        """Test h1 matches h1h2."""
        assert matches(j4_named("h1"), j4_named("h1h2"))

    def test_case_two(self) -> None:
        """Test h1 does not match h3 but their cuts do."""
        g, d = j4_named("h1"), j4_named("h3")
        assert not matches(g, d)
        assert matches(cut_j(g), cut_j(d))

    def test_case_three(self) -> None:
        """Test neither h1, h2 nor their cuts match."""
        g, d = j4_named("h1"), j4_named("h2")
        assert not matches(g, d)
        assert not matches(cut_j(g), cut_j(d))

    def test_matching_makes_circle(self) -> None:
        """Test a match removes one circle from the product."""
        assert jmultiply(j4_named("h1"), j4_named("h1h2")).removed == 1


class TestLayout:
    """Tests for the J_4 grid positions."""

    def test_three_by_three(self) -> None:
        """Test the 3x3 grid rows and columns."""
        grid = [
            ["h3", "h3h2", "h3h2h1"],
            ["h2h3", "h2", "h2h1"],
            ["h1h2h3", "h1h2", "h1"],
        ]
        for row, names in enumerate(grid, start=1):
            for column, name in enumerate(names, start=1):
                assert j4_layout(j4_named(name)) == GridPosition(3, row, column)

    def test_two_by_two(self) -> None:
        """Test the 2x2 grid of t-wire-free elements."""
        grid = [["h1h3", "h1h3h2"], ["h2h1h3", "h2h1h3h2"]]
        for row, names in enumerate(grid, start=1):
            for column, name in enumerate(names, start=1):
                assert j4_layout(j4_named(name)) == GridPosition(2, row, column)

    def test_identity_has_no_cell(self) -> None:
        """Test the identity lies outside both grids."""
        with pytest.raises(TooManyTWiresError):
            j4_layout(jones_identity(4))


def test_hook_erasure() -> None:
    """Test jones elements wrap erased hooks."""
    assert j4_named("h1").diagram == hook(4, 1)
