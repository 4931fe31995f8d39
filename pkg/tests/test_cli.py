# Copyright 2025 Altaira Labs
# SPDX-License-Identifier: Apache-2.0

"""Tests for the command-line surface."""

import pytest

from kauffman_identities.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, run
from kauffman_identities.config import Config


class TestCheck:
    """Tests for the check command."""

    def test_holds(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test an identity of K_4 prints HOLDS."""
        assert run(["check", "xxyx = xyxx"]) == EXIT_OK
        assert capsys.readouterr().out == "HOLDS\n"

    def test_fails(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test failures print the deleted letters and the condition."""
        assert run(["check", "xy = yx"]) == EXIT_FAIL
        assert capsys.readouterr().out == "FAILS K4 Y={} condition=(a)\n"

    def test_j4(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test checking in J_4."""
        assert run(["check", "--monoid", "J4", "x^3 = x^2"]) == EXIT_OK
        assert capsys.readouterr().out == "HOLDS\n"

    def test_kn_witness(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test falsification in K_5 prints the substitution."""
        assert run(["check", "--monoid", "Kn:5", "--budget", "10000", "xxyx = xyxx"]) == EXIT_FAIL
        assert capsys.readouterr().out == "FAILS Kn:5 x->h1h2h3 y->h4\n"

    def test_kn_no_counterexample(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test an exhausted budget is not reported as a failure."""
        assert run(["check", "--monoid", "Kn:4", "--budget", "300", "xxyx = xyxx"]) == EXIT_OK
        assert capsys.readouterr().out == "NO-COUNTEREXAMPLE K4 budget=300\n"

    def test_brute_force_jn(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test brute force over J_3."""
        assert run(["check", "--monoid", "J3", "xx = x"]) == EXIT_OK
        assert capsys.readouterr().out == "HOLDS\n"

    def test_rms(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test RMS failures name a construction."""
        assert run(["check", "--monoid", "RMS", "xy = yx"]) == EXIT_FAIL
        assert capsys.readouterr().out.startswith("FAILS RMS")

    def test_budget_exceeded(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test brute force refuses to exceed the budget."""
        assert run(["check", "--monoid", "J3", "--budget", "10", "xyz = zyx"]) == EXIT_USAGE
        assert "125 substitutions" in capsys.readouterr().err

    def test_parse_error(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test parse errors show a caret and exit with the usage code."""
        assert run(["check", "xyx"]) == EXIT_USAGE
        err = capsys.readouterr().err
        assert err.startswith("error:")
        assert "^" in err

    def test_unknown_monoid(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test an unknown monoid is a usage error."""
        assert run(["check", "--monoid", "B3", "xy = yx"]) == EXIT_USAGE
        assert "Invalid monoid" in capsys.readouterr().err

    def test_non_positive_budget(self) -> None:
        """Test the budget must be positive."""
        assert run(["check", "--budget", "0", "xy = yx"]) == EXIT_USAGE


class TestMultiply:
    """Tests for the multiply command."""

    def test_circle(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test h1 h1 closes one circle."""
        assert run(["multiply", "--rank", "4", "h1", "h1"]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.startswith("{n: 4,")
        assert "circles: 1}" in out

    def test_literal_infers_rank(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test literal operands supply the rank for generator words."""
        literal = "{n: 3, pairs: [[1, 2], [3, \"3'\"], [\"1'\", \"2'\"]], circles: 0}"
        assert run(["multiply", literal, "h1"]) == EXIT_OK
        assert "circles: 1}" in capsys.readouterr().out

    def test_inverse_circle(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test products involving d print coordinates."""
        assert run(["multiply", "--rank", "4", "h1", "d"]) == EXIT_OK
        out = capsys.readouterr().out.strip()
        assert out.startswith("({n: 4,")
        assert out.endswith(", -1)")

    def test_rank_required(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test generator words need a rank."""
        assert run(["multiply", "h1", "h2"]) == EXIT_USAGE
        assert "--rank" in capsys.readouterr().err

    def test_generator_out_of_range(self) -> None:
        """Test hooks beyond the rank are rejected."""
        assert run(["multiply", "--rank", "3", "h3"]) == EXIT_USAGE


class TestEnumerate:
    """Tests for the enumerate command."""

    def test_j4(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test J_4 lists 14 elements in order."""
        assert run(["enumerate", "4"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "J4: 14 elements"
        assert lines[1:5] == ["id", "h1", "h2", "h3"]
        assert len(lines) == 15

    def test_bound(self) -> None:
        """Test ranks above the enumeration bound are refused."""
        assert run(["enumerate", "7"], Config(max_jones_rank=6, table_rank_limit=6)) == EXIT_USAGE


class TestVerify:
    """Tests for the verify command."""

    def test_suite(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test a passing suite prints PASS lines."""
        assert run(["verify", "cutting-j4"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert all(line.startswith("PASS cutting-j4/") for line in lines)

    def test_rank_override(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test --max narrows rank-ranged suites."""
        assert run(["verify", "catalan", "--max", "5"]) == EXIT_OK
        assert capsys.readouterr().out == "PASS catalan counts 2,5,14\n"

    def test_unknown_suite(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test unknown suites are usage errors."""
        assert run(["verify", "nope"]) == EXIT_USAGE
        assert "Unknown suite" in capsys.readouterr().err


class TestRender:
    """Tests for the render command."""

    def test_ascii(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test ASCII drawings label both sides."""
        assert run(["render", "--rank", "4", "h1"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "1'" in out

    def test_svg(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test SVG output."""
        assert run(["render", "--rank", "4", "h1", "--format", "svg"]) == EXIT_OK
        assert "<svg" in capsys.readouterr().out

    def test_bad_format(self) -> None:
        """Test unknown formats are usage errors."""
        assert run(["render", "--rank", "4", "h1", "--format", "png"]) == EXIT_USAGE


class TestArguments:
    """Tests for argument handling."""

    def test_missing_command(self) -> None:
        """Test a missing subcommand is a usage error."""
        assert run([]) == EXIT_USAGE

    def test_help(self) -> None:
        """Test --help exits cleanly."""
        assert run(["--help"]) == EXIT_OK
