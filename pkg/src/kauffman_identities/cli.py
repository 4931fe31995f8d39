# Copyright 2025 Altaira Labs
# SPDX-License-Identifier: Apache-2.0

"""Command-line surface.

    kauffman-identities check --monoid K4 "xxyx = xyxx"
    kauffman-identities multiply --rank 4 h1 h1
    kauffman-identities enumerate 4
    kauffman-identities verify cutting-j4
    kauffman-identities render --rank 4 h1 --format svg

Exit codes: 0 when an identity holds or a suite passes, 1 when it fails,
2 on usage and parse errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from dataclasses import replace

from kauffman_identities.checks.checker import check_j4, check_k3_k4
from kauffman_identities.checks.falsify import falsify_kn
from kauffman_identities.checks.oracle import oracle_finite_monoid
from kauffman_identities.checks.verdict import Verdict
from kauffman_identities.config import Config, MonoidKind, RenderFormat
from kauffman_identities.diagrams.jones import jones_monoid
from kauffman_identities.diagrams.kauffman import (
    ExtKauffmanElement,
    KauffmanElement,
    from_diagram,
    to_diagram,
)
from kauffman_identities.diagrams.render import render
from kauffman_identities.diagrams.wire import WireDiagram, to_literal
from kauffman_identities.errors import KauffmanError, ParseError
from kauffman_identities.grammar import is_diagram_literal, parse_diagram_literal, parse_identity, parse_operand
from kauffman_identities.semigroups.finite import FiniteMonoid
from kauffman_identities.semigroups.rees import check_identity_rms_abelian, witness_rms
from kauffman_identities.suites.config import SuitesConfig, load_suites_config
from kauffman_identities.suites.registry import SuiteRegistry
from kauffman_identities.words import Identity

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(KauffmanError):
    """Arguments that parse but do not make sense together."""


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kauffman-identities",
        description="Diagram monoid arithmetic and identity checking",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="decide or refute an identity")
    check.add_argument("identity", help='identity such as "xxyx = xyxx"')
    check.add_argument("--monoid", default="K4", help="K3, K4, J4, J3, Jn:<n>, Kn:<n> or RMS")
    check.add_argument("--budget", type=int, help="substitution budget for brute force and falsification")
    check.add_argument("--seed", type=int, help="random seed for falsification")

    multiply = sub.add_parser("multiply", help="multiply generator words or diagram literals")
    multiply.add_argument("operands", nargs="+")
    multiply.add_argument("--rank", type=int, help="rank for generator words")

    enumerate_ = sub.add_parser("enumerate", help="list the elements of J_n")
    enumerate_.add_argument("rank", type=int)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("suite")
    verify.add_argument("--seed", type=int)
    verify.add_argument("--min", type=int, dest="min_rank", help="smallest rank for rank-ranged suites")
    verify.add_argument("--max", type=int, dest="max_rank", help="largest rank for rank-ranged suites")

    render_ = sub.add_parser("render", help="draw a diagram")
    render_.add_argument("operand", help="generator word or diagram literal")
    render_.add_argument("--rank", type=int)
    render_.add_argument("--format", default=RenderFormat.ASCII.value, help="ascii or svg")
    return parser


def _rank_for(operands: Sequence[str], rank: int | None) -> int:
    if rank is not None:
        return rank
    for operand in operands:
        if is_diagram_literal(operand):
            return parse_diagram_literal(operand).rank
    raise UsageError("--rank is required for generator words")


def _parse_operands(operands: Sequence[str], rank: int | None) -> list[WireDiagram | ExtKauffmanElement]:
    n = _rank_for(operands, rank)
    return [parse_operand(operand, n) for operand in operands]


def _is_extended(value: WireDiagram | ExtKauffmanElement) -> bool:
    return isinstance(value, ExtKauffmanElement) and not isinstance(value, KauffmanElement)


def multiply_operands(values: Sequence[WireDiagram | ExtKauffmanElement]) -> str:
    """Product text: a diagram literal, or ``(literal, m)`` once ``d`` is involved."""
    if any(_is_extended(v) for v in values):
        elements = [from_diagram(v) if isinstance(v, WireDiagram) else v for v in values]
        product = elements[0]
        for element in elements[1:]:
            product = product * element
        return str(product)
    diagrams = [v if isinstance(v, WireDiagram) else to_diagram(v) for v in values]
    result = diagrams[0]
    for diagram in diagrams[1:]:
        result = result * diagram
    return to_literal(result)


def _check_rms(identity: Identity) -> tuple[str, int]:
    if check_identity_rms_abelian(identity):
        return "HOLDS", EXIT_OK
    witness = witness_rms(identity)
    if witness is None:
        return "FAILS RMS", EXIT_FAIL
    assignments = " ".join(f"{name}->{value}" for name, value in witness.assignments())
    return f"FAILS RMS {witness.construction} {assignments}", EXIT_FAIL


def check_command(identity: Identity, monoid: str, config: Config) -> tuple[str, int]:
    """Run a check and return the output line and exit code.

    Raises:
        ValueError: If the monoid name is invalid.
        BudgetExceededError: If brute force needs more substitutions than allowed.
    """
    kind, rank = MonoidKind.from_string(monoid)
    verdict: Verdict | None
    if kind is MonoidKind.RMS:
        return _check_rms(identity)
    if kind in (MonoidKind.K3, MonoidKind.K4):
        verdict = check_k3_k4(identity, kind.value)
    elif kind is MonoidKind.J4:
        verdict = check_j4(identity)
    elif kind is MonoidKind.KN:
        assert rank is not None
        verdict = falsify_kn(
            identity,
            rank,
            budget=config.falsify_budget,
            seed=config.seed,
            table_rank_limit=config.table_rank_limit,
            max_rank=config.max_jones_rank,
        )
        if verdict is None:
            return f"NO-COUNTEREXAMPLE K{rank} budget={config.falsify_budget}", EXIT_OK
    else:
        n = 3 if kind is MonoidKind.J3 else rank
        assert n is not None
        verdict = oracle_finite_monoid(
            identity, FiniteMonoid.jones(n, config.max_jones_rank), budget=config.monoid_budget
        )
    return verdict.to_line(), EXIT_OK if verdict.holds else EXIT_FAIL


def _apply_overrides(config: Config, args: argparse.Namespace) -> Config:
    if getattr(args, "seed", None) is not None:
        config = replace(config, seed=args.seed)
    budget = getattr(args, "budget", None)
    if budget is not None:
        if budget < 1:
            raise UsageError("--budget must be positive")
        config = replace(config, falsify_budget=budget, monoid_budget=budget)
    return config


def _suites_config(config: Config) -> SuitesConfig | None:
    if not config.suites_config_path:
        return None
    return load_suites_config(config.suites_config_path)


def _verify(args: argparse.Namespace, config: Config) -> int:
    suites_config = _suites_config(config) or SuitesConfig()
    registry = SuiteRegistry(config, suites_config)
    if args.min_rank is not None or args.max_rank is not None:
        names = registry.names()[:-1] if args.suite == "all" else [args.suite]
        overrides = []
        for name in names:
            settings = registry.settings(name)
            if args.min_rank is not None:
                settings.min_rank = args.min_rank
            if args.max_rank is not None:
                settings.max_rank = args.max_rank
            overrides.append(settings)
        others = [s for s in suites_config.suites if s.name not in names]
        registry.suites_config = SuitesConfig(suites_config.seed, others + overrides)
    report = registry.run(args.suite, args.seed)
    print(report)
    return EXIT_OK if report.passed else EXIT_FAIL


def _dispatch(args: argparse.Namespace, config: Config) -> int:
    if args.command == "check":
        line, code = check_command(parse_identity(args.identity), args.monoid, config)
        print(line)
        return code

    if args.command == "multiply":
        print(multiply_operands(_parse_operands(args.operands, args.rank)))
        return EXIT_OK

    if args.command == "enumerate":
        monoid = jones_monoid(args.rank, config.max_jones_rank)
        print(f"J{args.rank}: {len(monoid)} elements")
        for name in monoid.names:
            print(name)
        return EXIT_OK

    if args.command == "verify":
        return _verify(args, config)

    fmt = RenderFormat.from_string(args.format)
    (value,) = _parse_operands([args.operand], args.rank)
    diagram = value if isinstance(value, WireDiagram) else to_diagram(value)
    print(render(diagram, fmt))
    return EXIT_OK


def run(argv: Sequence[str] | None = None, config: Config | None = None) -> int:
    """Parse arguments, execute the command and return the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    config = config or Config()
    try:
        return _dispatch(args, _apply_overrides(config, args))
    except ParseError as e:
        print(e.display(), file=sys.stderr)
        return EXIT_USAGE
    except (KauffmanError, ValueError, KeyError, FileNotFoundError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
