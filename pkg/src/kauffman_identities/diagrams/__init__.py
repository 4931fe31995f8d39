# Copyright 2025 Altaira Labs
# SPDX-License-Identifier: Apache-2.0

"""Wire diagrams and the Jones and Kauffman monoids."""

from kauffman_identities.diagrams.jones import JonesElement, JonesMonoid, cut_j, enumerate_jones, jmultiply
from kauffman_identities.diagrams.kauffman import (
    ExtKauffmanElement,
    KauffmanElement,
    cut_k,
    evaluate,
    generator,
    kmultiply,
)
from kauffman_identities.diagrams.wire import Point, WireDiagram, WireKind, hook, make_diagram, multiply

__all__ = [
    "JonesElement",
    "JonesMonoid",
    "cut_j",
    "enumerate_jones",
    "jmultiply",
    "ExtKauffmanElement",
    "KauffmanElement",
    "cut_k",
    "evaluate",
    "generator",
    "kmultiply",
    "Point",
    "WireDiagram",
    "WireKind",
    "hook",
    "make_diagram",
    "multiply",
]
