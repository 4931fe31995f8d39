# Copyright 2025 Altaira Labs
# SPDX-License-Identifier: Apache-2.0

"""Line-oriented verification reports: ``PASS|FAIL <check-name> [detail]``."""

from __future__ import annotations

from dataclasses import dataclass, field

# Violations listed per failing check before the rest are summarised.
MAX_LISTED_VIOLATIONS = 5


@dataclass
class CheckResult:
    """Outcome of one named check."""

    name: str
    passed: bool
    detail: str = ""

    def to_line(self) -> str:
        line = f"{'PASS' if self.passed else 'FAIL'} {self.name}"
        return f"{line} {self.detail}" if self.detail else line


@dataclass
class Report:
    """Results of a verification suite."""

    suite: str
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def add(self, name: str, passed: bool, detail: str = "") -> CheckResult:
        result = CheckResult(name, passed, detail)
        self.results.append(result)
        return result

    def add_violations(self, name: str, checked: int, violations: list[str], unit: str = "pairs") -> CheckResult:
        """Record a check over ``checked`` cases; the detail lists sorted violations."""
        if not violations:
            return self.add(name, True, f"{checked} {unit} checked")
        listed = sorted(violations)[:MAX_LISTED_VIOLATIONS]
        more = len(violations) - len(listed)
        detail = f"{len(violations)}/{checked} {unit} violated: " + "; ".join(listed)
        if more:
            detail += f"; ... {more} more"
        return self.add(name, False, detail)

    def extend(self, other: Report) -> None:
        self.results.extend(other.results)

    def to_lines(self) -> list[str]:
        return [r.to_line() for r in self.results]

    def __str__(self) -> str:
        return "\n".join(self.to_lines())
