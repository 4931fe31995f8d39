# Copyright 2025 Altaira Labs
# SPDX-License-Identifier: Apache-2.0

"""Checker verdicts and their line and dictionary forms."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any

from kauffman_identities.words import Letter


class Condition(str, Enum):
    """Which condition a deletion residue violates."""

    CONTENT = "content"
    FIRST = "(a)"
    LAST = "(b)"
    COUNTS = "(c)"
    OCCURS = "(c')"

    @property
    def rank(self) -> int:
        """Order used to break ties between conditions failing on the same Y."""
        return list(Condition).index(self)


@dataclass(frozen=True)
class FailingSubset:
    """A set Y of deleted letters and the condition that fails after deleting it."""

    deleted: frozenset[Letter]
    condition: Condition

    def sort_key(self) -> tuple[int, tuple[str, ...], int]:
        return (len(self.deleted), tuple(sorted(x.name for x in self.deleted)), self.condition.rank)

    def __str__(self) -> str:
        names = ",".join(sorted(x.name for x in self.deleted))
        return f"Y={{{names}}} condition={self.condition.value}"


@dataclass(frozen=True)
class SubstitutionWitness:
    """Letter images under which the two sides evaluate differently."""

    assignments: tuple[tuple[str, str], ...]
    lhs_value: str
    rhs_value: str

    def __str__(self) -> str:
        return " ".join(f"{letter}->{value}" for letter, value in self.assignments)


@dataclass(frozen=True)
class Verdict:
    """Outcome of checking an identity in a monoid."""

    holds: bool
    monoid: str
    failure: FailingSubset | None = None
    witness: SubstitutionWitness | None = None

    def __post_init__(self) -> None:
        if not self.holds and self.failure is None and self.witness is None:
            raise ValueError("A failing verdict needs a failing subset or a witness")

    @classmethod
    def holding(cls, monoid: str) -> Verdict:
        return cls(True, monoid)

    @classmethod
    def failing(cls, monoid: str, failure: FailingSubset) -> Verdict:
        return cls(False, monoid, failure=failure)

    @classmethod
    def refuted(cls, monoid: str, witness: SubstitutionWitness) -> Verdict:
        return cls(False, monoid, witness=witness)

    def to_line(self) -> str:
        """``HOLDS`` or ``FAILS <monoid> <condition-or-substitution>``."""
        if self.holds:
            return "HOLDS"
        detail = str(self.witness) if self.witness is not None else str(self.failure)
        return f"FAILS {self.monoid} {detail}"

    def to_dict(self) -> dict[str, Any]:
        """Structured form for test harnesses and JSON output."""
        data: dict[str, Any] = {"holds": self.holds, "monoid": self.monoid}
        if self.failure is not None:
            data["failure"] = {
                "deleted": sorted(x.name for x in self.failure.deleted),
                "condition": self.failure.condition.value,
            }
        if self.witness is not None:
            data["witness"] = {
                "substitution": dict(self.witness.assignments),
                "lhs": self.witness.lhs_value,
                "rhs": self.witness.rhs_value,
            }
        return data
