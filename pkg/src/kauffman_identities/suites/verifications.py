# Copyright 2025 Altaira Labs
# SPDX-License-Identifier: Apache-2.0

"""Computational verifications of the diagram-monoid results.

Each function returns a Report of ``PASS|FAIL`` lines; the registry maps
suite names onto them.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterator, Sequence

import numpy as np

from kauffman_identities.checks.checker import Mode, check_j4, check_k3_k4
from kauffman_identities.checks.falsify import falsify_kn
from kauffman_identities.checks.oracle import oracle_all_Y, oracle_finite_monoid
from kauffman_identities.diagrams.jones import (
    DEFAULT_MAX_RANK,
    catalan,
    cut_j,
    enumerate_jones,
    flat_ideal,
    jmultiply,
    matches,
)
from kauffman_identities.diagrams.kauffman import (
    ExtKauffmanElement,
    cut_k,
    evaluate,
    evaluate_generators,
    generator,
    to_diagram,
)
from kauffman_identities.diagrams.wire import circle_gen, hook, make_diagram, multiply
from kauffman_identities.reports import Report
from kauffman_identities.semigroups.finite import FiniteMonoid
from kauffman_identities.semigroups.rees import witness_rms
from kauffman_identities.suites.config import CorpusConfig
from kauffman_identities.words import Identity, Letter, Word, delete_letters

logger = logging.getLogger(__name__)

ALPHABET = ("x", "y", "z", "t", "u", "v")


def verify_relations(min_rank: int = 2, max_rank: int = 6) -> Report:
    """Defining relations among hooks and circles, in W_n and in coordinates."""
    report = Report("relations")
    for n in range(max(min_rank, 2), max_rank + 1):
        c = circle_gen(n)
        h = {i: hook(n, i) for i in range(1, n)}
        commute, braid, square = [], [], []
        for i, j in itertools.product(h, repeat=2):
            if abs(i - j) >= 2 and h[i] * h[j] != h[j] * h[i]:
                commute.append(f"h{i}h{j}")
            if abs(i - j) == 1 and h[i] * h[j] * h[i] != h[i]:
                braid.append(f"h{i}h{j}h{i}")
        for i in h:
            if not (h[i] * h[i] == c * h[i] == h[i] * c):
                square.append(f"h{i}")

        kh = {i: generator(n, f"h{i}") for i in range(1, n)}
        kc, kd = generator(n, "c"), generator(n, "d")
        one = evaluate_generators(n, [])
        coordinates = []
        for i, j in itertools.product(kh, repeat=2):
            if abs(i - j) >= 2 and kh[i] * kh[j] != kh[j] * kh[i]:
                coordinates.append(f"h{i}h{j}")
            if abs(i - j) == 1 and kh[i] * kh[j] * kh[i] != kh[i]:
                coordinates.append(f"h{i}h{j}h{i}")
        for i in kh:
            if not (kh[i] * kh[i] == kc * kh[i] == kh[i] * kc):
                coordinates.append(f"h{i}^2")
            if kd * kh[i] != kh[i] * kd:
                coordinates.append(f"dh{i}")
        units = kc * kd == one and kd * kc == one

        report.add_violations(f"relations/commute-n{n}", len(h) ** 2, commute)
        report.add_violations(f"relations/absorb-n{n}", len(h) ** 2, braid)
        report.add_violations(f"relations/square-n{n}", len(h), square, unit="hooks")
        report.add_violations(f"relations/coordinates-n{n}", len(kh) ** 2 + 2 * len(kh), coordinates, unit="relations")
        report.add(f"relations/units-n{n}", units, "cd = dc = 1")
    return report


def verify_catalan(min_rank: int = 2, max_rank: int = 7, bound: int = DEFAULT_MAX_RANK) -> Report:
    """Sizes of J_n agree with the Catalan numbers.

    Raises:
        EnumerationBoundError: If max_rank exceeds bound.
    """
    report = Report("catalan")
    counts = []
    wrong = []
    for n in range(max(min_rank, 2), max_rank + 1):
        size = len(enumerate_jones(n, max_rank=bound))
        counts.append(str(size))
        if size != catalan(n):
            wrong.append(f"J{n}: {size} != {catalan(n)}")
    if wrong:
        report.add("catalan", False, "; ".join(wrong))
    else:
        report.add("catalan", True, f"counts {','.join(counts)}")
    return report


def verify_cutting_j4() -> Report:
    """cut_j is an idempotent endomorphism of the flat ideal of J_4."""
    report = Report("cutting-j4")
    flat = flat_ideal(4)
    broken = [f"{x} * {y}" for x, y in itertools.product(flat, repeat=2) if cut_j(x * y) != cut_j(x) * cut_j(y)]
    report.add_violations("cutting-j4/endomorphism", len(flat) ** 2, broken)
    unstable = [str(x) for x in flat if cut_j(cut_j(x)) != cut_j(x)]
    report.add_violations("cutting-j4/idempotent", len(flat), unstable, unit="elements")
    return report


def _case(x: ExtKauffmanElement, y: ExtKauffmanElement) -> int:
    xj, yj = x.jones, y.jones
    if matches(xj, yj):
        return 1
    if matches(cut_j(xj), cut_j(yj)):
        return 2
    return 3


def verify_cutting_k4(circle_range: Sequence[int] = range(-3, 4)) -> Report:
    """cut_k is an endomorphism of the flat ideal of the extended K_4.

    Also checks the three-way case split for left factors with two t-wires:
    removed circles before and after cutting are (1, 2), (0, 2) and (0, 1).
    """
    report = Report("cutting-k4")
    flat = flat_ideal(4)
    elements = [ExtKauffmanElement(j, m) for j in flat for m in circle_range]
    broken = [
        f"{x} * {y}" for x, y in itertools.product(elements, repeat=2) if cut_k(x * y) != cut_k(x) * cut_k(y)
    ]
    report.add_violations("cutting-k4/endomorphism", len(elements) ** 2, broken)

    expected = {1: (1, 2), 2: (0, 2), 3: (0, 1)}
    cases = {1: 0, 2: 0, 3: 0}
    wrong = []
    checked = 0
    for xj, yj in itertools.product(flat, repeat=2):
        if xj.t_wires != 2:
            continue
        checked += 1
        case = _case(ExtKauffmanElement(xj), ExtKauffmanElement(yj))
        cases[case] += 1
        removed = (jmultiply(xj, yj).removed, jmultiply(cut_j(xj), cut_j(yj)).removed)
        if removed != expected[case]:
            wrong.append(f"case {case}: {xj} * {yj} removed {removed}")
    report.add_violations("cutting-k4/cases", checked, wrong)
    report.add("cutting-k4/case-counts", sum(cases.values()) == checked, " ".join(f"case{k}={v}" for k, v in cases.items()))
    return report


def verify_cutting_j6(samples: int = 2_000, seed: int = 0) -> Report:
    """cut_j is multiplicative on sampled pairs of the flat ideal of J_6."""
    report = Report("cutting-j6")
    flat = flat_ideal(6)
    rng = np.random.default_rng(seed)
    picks = rng.integers(0, len(flat), size=(samples, 2))
    broken = []
    for a, b in picks:
        x, y = flat[int(a)], flat[int(b)]
        if cut_j(x * y) != cut_j(x) * cut_j(y):
            broken.append(f"{x} * {y}")
    report.add_violations("cutting-j6/endomorphism", samples, broken)
    return report


# x^2yx and xyx^2 in W_5 under x -> h1h2h3, y -> h4, drawn by hand.
K5_LHS_PAIRS = ((1, 2), (3, 4), (5, "1'"), ("2'", "5'"), ("3'", "4'"))
K5_RHS_PAIRS = ((1, 2), (3, 4), (5, "5'"), ("1'", "2'"), ("3'", "4'"))


def k5_counterexample() -> tuple[ExtKauffmanElement, ExtKauffmanElement]:
    """Values of x^2yx and xyx^2 in K_5 under x -> h1h2h3, y -> h4."""
    x, y = Letter("x"), Letter("y")
    phi = {x: evaluate_generators(5, ["h1", "h2", "h3"]), y: generator(5, "h4")}
    return evaluate(Word((x, x, y, x)), phi), evaluate(Word((x, y, x, x)), phi)


def verify_k5_counterexample() -> Report:
    """The identity x^2yx = xyx^2 holds in K_4 but fails in K_5."""
    report = Report("k5-counterexample")
    identity = Identity(Word.of("xxyx"), Word.of("xyxx"))
    lhs, rhs = k5_counterexample()
    parts = []
    if lhs.jones != rhs.jones:
        parts.append("jones parts differ")
    if lhs.circles != rhs.circles:
        parts.append(f"circles {lhs.circles} vs {rhs.circles}")
    report.add("k5-counterexample/separates", lhs != rhs, ", ".join(parts))

    expected = (make_diagram(5, K5_LHS_PAIRS, circles=1), make_diagram(5, K5_RHS_PAIRS))
    x = multiply(multiply(hook(5, 1), hook(5, 2)), hook(5, 3))
    y = hook(5, 4)
    direct = (x * x * y * x, x * y * x * x)
    report.add(
        "k5-counterexample/diagram-oracle",
        direct == expected and (to_diagram(lhs), to_diagram(rhs)) == expected,
        "coordinates and W5 products match the drawn diagrams",
    )
    report.add("k5-counterexample/holds-in-k4", check_k3_k4(identity).holds)

    verdict = falsify_kn(identity, 5)
    witness = verdict.witness if verdict is not None else None
    report.add("k5-counterexample/falsifier", witness is not None, str(witness or ""))
    return report


def _random_word(rng: np.random.Generator, letters: Sequence[str], max_length: int) -> Word:
    length = int(rng.integers(1, max_length + 1))
    return Word.of(letters[int(i)] for i in rng.integers(0, len(letters), size=length))


def random_identities(count: int, max_letters: int, max_length: int, seed: int) -> Iterator[Identity]:
    """Random identities; half are rearrangements of the left side so they share content."""
    rng = np.random.default_rng(seed)
    for _ in range(count):
        k = int(rng.integers(1, max_letters + 1))
        letters = ALPHABET[:k]
        lhs = _random_word(rng, letters, max_length)
        if rng.random() < 0.5:
            rhs = Word(tuple(lhs.letters[int(i)] for i in rng.permutation(len(lhs))))
        else:
            rhs = _random_word(rng, letters, max_length)
        yield Identity(lhs, rhs)


def exhaustive_identities(max_letters: int, max_length: int) -> Iterator[Identity]:
    """Every identity over the first ``max_letters`` letters with sides up to ``max_length``."""
    letters = ALPHABET[:max_letters]
    words = [Word.of(w) for length in range(1, max_length + 1) for w in itertools.product(letters, repeat=length)]
    for lhs, rhs in itertools.product(words, repeat=2):
        yield Identity(lhs, rhs)


def _rms_separates(identity: Identity) -> bool:
    verdict = check_k3_k4(identity)
    assert verdict.failure is not None
    deleted = verdict.failure.deleted
    residue = Identity(
        delete_letters(identity.lhs, deleted).to_word(),
        delete_letters(identity.rhs, deleted).to_word(),
    )
    return witness_rms(residue) is not None


def verify_checker_oracle(corpus: CorpusConfig | None = None, seed: int = 0) -> Report:
    """Fast checkers agree with the exponential oracles on random and exhaustive corpora."""
    corpus = corpus or CorpusConfig()
    report = Report("checker-oracle")
    random_corpus = list(random_identities(corpus.random_identities, corpus.max_letters, corpus.max_length, seed))
    exhaustive = list(exhaustive_identities(corpus.exhaustive_letters, corpus.exhaustive_length))

    for label, identities in (("random", random_corpus), ("exhaustive", exhaustive)):
        k4 = [str(i) for i in identities if check_k3_k4(i) != oracle_all_Y(i, Mode.COUNTS)]
        j4 = [str(i) for i in identities if check_j4(i) != oracle_all_Y(i, Mode.SETS)]
        report.add_violations(f"checker-oracle/k3-k4-{label}", len(identities), k4, unit="identities")
        report.add_violations(f"checker-oracle/j4-{label}", len(identities), j4, unit="identities")

    j4_monoid = FiniteMonoid.jones(4)
    monoid_corpus = list(
        random_identities(corpus.monoid_identities, corpus.monoid_letters, corpus.max_length, seed + 1)
    )
    ground = [
        str(i) for i in monoid_corpus if check_j4(i).holds != oracle_finite_monoid(i, j4_monoid).holds
    ]
    report.add_violations("checker-oracle/j4-monoid", len(monoid_corpus), ground, unit="identities")

    combined = random_corpus + exhaustive
    rejected = [i for i in combined if not check_k3_k4(i).holds]
    unwitnessed = [str(i) for i in rejected if not _rms_separates(i)]
    report.add_violations("checker-oracle/rms-witness", len(rejected), unwitnessed, unit="rejections")

    accepted = [i for i in combined if check_k3_k4(i).holds]
    refuted = [
        str(i) for i in accepted if falsify_kn(i, 4, budget=corpus.falsify_budget, seed=seed) is not None
    ]
    report.add_violations("checker-oracle/k4-falsifier", len(accepted), refuted, unit="accepted identities")

    weaker = [str(i) for i in accepted if not check_j4(i).holds]
    report.add_violations("checker-oracle/chain", len(accepted), weaker, unit="accepted identities")
    logger.info(
        "Checker/oracle comparison finished",
        extra={"random": len(random_corpus), "exhaustive": len(exhaustive), "passed": report.passed},
    )
    return report
