# Copyright 2025 Altaira Labs
# SPDX-License-Identifier: Apache-2.0

"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations


class KauffmanError(Exception):
    """Base class for all library errors."""


# Words and identities


class WordError(KauffmanError, ValueError):
    """Invalid word construction or word operation."""


class UnassignedLetterError(KauffmanError, KeyError):
    """A substitution does not cover a letter of the evaluated word."""

    def __init__(self, letter: str):
        super().__init__(f"No value assigned to letter '{letter}'")
        self.letter = letter

    def __str__(self) -> str:
        return str(self.args[0])


# Diagrams


class DiagramError(KauffmanError, ValueError):
    """Invalid diagram or diagram operation."""


class BadRankError(DiagramError):
    """Rank below the supported minimum."""

    def __init__(self, rank: int, minimum: int = 2):
        super().__init__(f"Rank must be at least {minimum}, got {rank}")
        self.rank = rank
        self.minimum = minimum


class NotPerfectMatchingError(DiagramError):
    """Pairs do not form a perfect matching of the boundary points."""

    def __init__(self, message: str, point: str | None = None):
        super().__init__(message)
        self.point = point


class PointOutOfRangeError(DiagramError):
    """Point index outside [1, n]."""


class RankMismatchError(DiagramError):
    """Operands of a binary operation have different ranks."""

    def __init__(self, left_rank: int, right_rank: int):
        super().__init__(f"Rank mismatch: {left_rank} vs {right_rank}")
        self.left_rank = left_rank
        self.right_rank = right_rank


class WireNotFoundError(DiagramError):
    """The queried pair is not a wire of the diagram."""


class GeneratorIndexError(DiagramError):
    """Hook index outside [1, n-1] or unknown generator name."""


class TooManyTWiresError(DiagramError):
    """Cutting maps are only defined on diagrams with at most two t-wires."""

    def __init__(self, count: int):
        super().__init__(f"Cutting needs at most two t-wires, diagram has {count}")
        self.count = count


class OddRankError(DiagramError):
    """Cutting maps need an even rank of at least four."""

    def __init__(self, rank: int):
        super().__init__(f"Cutting needs an even rank >= 4, got {rank}")
        self.rank = rank


# Searches and enumerations


class EnumerationBoundError(KauffmanError):
    """Requested enumeration exceeds the configured bound."""

    def __init__(self, requested: int, bound: int):
        super().__init__(f"Rank {requested} exceeds the enumeration bound {bound}")
        self.requested = requested
        self.bound = bound


class AlphabetTooLargeError(KauffmanError):
    """Exponential oracle refused because the alphabet is too large."""

    def __init__(self, size: int, bound: int):
        super().__init__(f"Alphabet of {size} letters exceeds the oracle bound {bound}")
        self.size = size
        self.bound = bound


class BudgetExceededError(KauffmanError):
    """Exhaustive search would need more substitutions than allowed."""

    def __init__(self, required: int, budget: int):
        super().__init__(f"Search needs {required} substitutions, budget is {budget}")
        self.required = required
        self.budget = budget


# Semigroups


class UnknownSemigroupError(KauffmanError, KeyError):
    """Unknown builtin semigroup or monoid name."""

    def __init__(self, name: str, valid: list[str]):
        super().__init__(f"Unknown semigroup '{name}'. Must be one of: {valid}")
        self.name = name
        self.valid = valid

    def __str__(self) -> str:
        return str(self.args[0])


class RmsIndexError(KauffmanError, IndexError):
    """Row or column index outside the sandwich matrix."""


# Suites


class UnknownSuiteError(KauffmanError, KeyError):
    """Unknown verification suite name."""

    def __init__(self, name: str, valid: list[str]):
        super().__init__(f"Unknown suite '{name}'. Must be one of: {valid}")
        self.name = name
        self.valid = valid

    def __str__(self) -> str:
        return str(self.args[0])


# Parsing


class ParseError(KauffmanError, ValueError):
    """Syntax error in an identity, generator word or diagram literal."""

    def __init__(
        self,
        message: str,
        source: str = "",
        position: int | None = None,
        expected: str | None = None,
    ):
        super().__init__(message)
        self.message = message
        self.source = source
        self.position = position
        self.expected = expected

    def display(self) -> str:
        """Render the error with a caret under the offending position."""
        lines = [f"error: {self.message}"]
        if self.expected:
            lines[0] += f" (expected {self.expected})"
        if self.source:
            lines.append(f"  {self.source}")
            if self.position is not None:
                lines.append("  " + " " * self.position + "^")
        return "\n".join(lines)
