# Copyright 2025 Altaira Labs
# SPDX-License-Identifier: Apache-2.0

"""Subdirect decompositions of the flat ideals of J_4 and the extended K_4.

The flat ideal of J_4 (elements with at most two t-wires) embeds into
RB2x2 x M3: the first coordinate is the grid cell of the cut element, the
second the grid cell of the element itself when it has two t-wires and zero
otherwise. The flat ideal of the extended K_4 embeds into RC2 x MC3 in the
same way, with circle counts carried as powers of c.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Callable, Sequence
from typing import TypeVar

from kauffman_identities.diagrams.jones import JonesElement, cut_j, flat_ideal, j4_layout
from kauffman_identities.diagrams.kauffman import ExtKauffmanElement, cut_k
from kauffman_identities.reports import Report
from kauffman_identities.semigroups.rees import (
    E,
    ZERO,
    CyclicInt,
    ReesMatrixSemigroup,
    RmsElement,
    Triple,
    builtin,
)

logger = logging.getLogger(__name__)

DEFAULT_CIRCLE_RANGE = range(-3, 4)

T = TypeVar("T")


def to_rectangular_band(x: JonesElement) -> Triple:
    """Cell of cut_j(x) in the 2x2 grid, as (row, e, column)."""
    cell = j4_layout(cut_j(x))
    return Triple(cell.row, E, cell.column)


def to_m3(x: JonesElement) -> RmsElement:
    """Cell of a two-t-wire element in the 3x3 grid; zero otherwise."""
    if x.t_wires != 2:
        return ZERO
    cell = j4_layout(x)
    return Triple(cell.row, E, cell.column)


def to_rc2(x: ExtKauffmanElement) -> Triple:
    """(row, c^m, column) where the cut element has grid cell (row, column) and m circles."""
    cut = cut_k(x)
    cell = j4_layout(cut.jones)
    return Triple(cell.row, CyclicInt(cut.circles), cell.column)


def to_mc3(x: ExtKauffmanElement) -> RmsElement:
    """(row, c^m, column) for two-t-wire elements with m circles; zero otherwise."""
    if x.t_wires != 2:
        return ZERO
    cell = j4_layout(x.jones)
    return Triple(cell.row, CyclicInt(x.circles), cell.column)


def _homomorphism_violations(
    elements: Sequence[T],
    multiply: Callable[[T, T], T],
    target: ReesMatrixSemigroup,
    image: Callable[[T], RmsElement],
) -> list[str]:
    images = {x: image(x) for x in elements}
    violations = []
    for x, y in itertools.product(elements, repeat=2):
        if image(multiply(x, y)) != target.multiply(images[x], images[y]):
            violations.append(f"{x} * {y}")
    return violations


def verify_structure_j4() -> Report:
    """Check the embedding of the flat ideal of J_4 into RB2x2 x M3."""
    report = Report("structure-j4")
    flat = flat_ideal(4)
    ideal = [x for x in flat if x.t_wires == 0]
    rb, m3 = builtin("RB2x2"), builtin("M3")

    cuts = {x: cut_j(x) for x in flat}
    report.add(
        "structure-j4/retract",
        set(cuts.values()) == set(ideal)
        and all(cuts[y] == y for y in cuts.values()),
        f"image has {len(set(cuts.values()))} elements",
    )

    outside = [f"{x} * {y}" for x, y in itertools.product(flat, repeat=2)
               if (x in ideal or y in ideal) and (x * y) not in ideal]
    report.add_violations("structure-j4/ideal", len(flat) ** 2, outside)

    band = _homomorphism_violations(ideal, JonesElement.__mul__, rb, to_rectangular_band)
    report.add_violations("structure-j4/rectangular-band", len(ideal) ** 2, band)

    report.add_violations(
        "structure-j4/homomorphism-rb",
        len(flat) ** 2,
        _homomorphism_violations(flat, JonesElement.__mul__, rb, to_rectangular_band),
    )
    report.add_violations(
        "structure-j4/homomorphism-m3",
        len(flat) ** 2,
        _homomorphism_violations(flat, JonesElement.__mul__, m3, to_m3),
    )

    images = {(to_rectangular_band(x), to_m3(x)) for x in flat}
    report.add("structure-j4/injective", len(images) == len(flat), f"{len(images)} distinct images")

    rb_hit = {to_rectangular_band(x) for x in flat}
    m3_hit = {to_m3(x) for x in flat}
    report.add(
        "structure-j4/subdirect",
        rb_hit == set(rb.elements()) and m3_hit == set(m3.elements()),
        f"{len(rb_hit)}/4 band elements, {len(m3_hit)}/10 M3 elements",
    )
    logger.info("Verified J4 structure", extra={"passed": report.passed})
    return report


def verify_structure_ext_k4(circle_range: Sequence[int] = DEFAULT_CIRCLE_RANGE) -> Report:
    """Check the maps of the flat ideal of the extended K_4 into RC2 and MC3.

    Circle counts are sampled from ``circle_range``; the check is exhaustive
    over Jones parts.
    """
    report = Report("structure-k4")
    elements = [ExtKauffmanElement(j, m) for j in flat_ideal(4) for m in circle_range]
    rc2, mc3 = builtin("RC2"), builtin("MC3")
    pairs = len(elements) ** 2

    report.add_violations(
        "structure-k4/homomorphism-rc2",
        pairs,
        _homomorphism_violations(elements, ExtKauffmanElement.__mul__, rc2, to_rc2),
    )
    report.add_violations(
        "structure-k4/homomorphism-mc3",
        pairs,
        _homomorphism_violations(elements, ExtKauffmanElement.__mul__, mc3, to_mc3),
    )

    leaving = [
        f"{x} * {y}"
        for x, y in itertools.product(elements, repeat=2)
        if x.t_wires == 2 and y.t_wires == 2 and (x * y).t_wires != 2
        and mc3.multiply(to_mc3(x), to_mc3(y)) is not ZERO
    ]
    report.add_violations("structure-k4/zero", pairs, leaving)

    images = {(to_rc2(x), to_mc3(x)) for x in elements}
    report.add(
        "structure-k4/injective",
        len(images) == len(elements),
        f"{len(images)} distinct images of {len(elements)} sampled elements",
    )
    logger.info(
        "Verified extended K4 structure",
        extra={"passed": report.passed, "circle_range": list(circle_range)},
    )
    return report
