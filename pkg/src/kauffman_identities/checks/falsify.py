# Copyright 2025 Altaira Labs
# SPDX-License-Identifier: Apache-2.0

"""Counterexample search for identities in K_n, where no decision procedure is known.

The search only ever reports a separating substitution or "no counterexample
within budget"; it never concludes that an identity holds.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterator, Sequence

import numpy as np

from kauffman_identities.checks.verdict import SubstitutionWitness, Verdict
from kauffman_identities.diagrams.jones import DEFAULT_MAX_RANK, IDENTITY_NAME, JonesMonoid, jones_monoid
from kauffman_identities.diagrams.kauffman import (
    CIRCLE,
    ExtKauffmanElement,
    evaluate,
    evaluate_generators,
)
from kauffman_identities.words import Identity, Letter, WordLike, content

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 10_000
DEFAULT_TABLE_RANK_LIMIT = 6
BATCH_SIZE = 4096
# Share of random letter images that also carry one circle.
CIRCLE_RATE = 0.2


def _circle_suffix(m: int) -> str:
    if m == 0:
        return ""
    return CIRCLE if m == 1 else f"{CIRCLE}^{m}"


def element_word(jones_name: str, circles: int) -> str:
    """Generator word for (Jones element, circles), e.g. ``h1h2c`` or ``c^2``."""
    if jones_name == IDENTITY_NAME:
        return _circle_suffix(circles) or IDENTITY_NAME
    return jones_name + _circle_suffix(circles)


def _describe(value: ExtKauffmanElement, monoid: JonesMonoid | None) -> str:
    if monoid is not None and value.jones in monoid:
        return element_word(monoid.name(value.jones), value.circles)
    return str(value)


def seed_pool(n: int) -> list[str]:
    """Generator words tried first: a long hook chain, the last hook, every hook, c and id."""
    pool = []
    if n >= 3:
        pool.append("".join(f"h{i}" for i in range(1, n - 1)))
    pool.append(f"h{n - 1}")
    pool.extend(f"h{i}" for i in range(1, n))
    pool.extend([CIRCLE, IDENTITY_NAME])
    return list(dict.fromkeys(pool))


def _names(word: str) -> list[str]:
    if word == IDENTITY_NAME:
        return []
    if word == CIRCLE:
        return [CIRCLE]
    return [f"h{i}" for i in word.split("h")[1:]]


class _Search:
    def __init__(self, identity: Identity, n: int, monoid_name: str, monoid: JonesMonoid | None):
        self.identity = identity
        self.n = n
        self.monoid_name = monoid_name
        self.monoid = monoid
        self.alphabet = sorted(identity.content)
        self.tried = 0

    def compare(self, images: Sequence[ExtKauffmanElement], words: Sequence[str]) -> Verdict | None:
        self.tried += 1
        phi = dict(zip(self.alphabet, images))
        lhs = evaluate(self.identity.lhs, phi)
        rhs = evaluate(self.identity.rhs, phi)
        if lhs == rhs:
            return None
        witness = SubstitutionWitness(
            tuple((letter.name, word) for letter, word in zip(self.alphabet, words)),
            _describe(lhs, self.monoid),
            _describe(rhs, self.monoid),
        )
        return Verdict.refuted(self.monoid_name, witness)


def _content_witness(search: _Search) -> Verdict | None:
    lhs, rhs = content(search.identity.lhs), content(search.identity.rhs)
    if lhs == rhs:
        return None
    odd = min(lhs ^ rhs)
    words = [CIRCLE if letter is odd else IDENTITY_NAME for letter in search.alphabet]
    images = [evaluate_generators(search.n, _names(w)) for w in words]
    return search.compare(images, words)


def _seeded(search: _Search, budget: int) -> Verdict | None:
    pool = seed_pool(search.n)
    values = {w: evaluate_generators(search.n, _names(w)) for w in pool}
    for words in itertools.islice(itertools.product(pool, repeat=len(search.alphabet)), budget):
        verdict = search.compare([values[w] for w in words], words)
        if verdict is not None:
            return verdict
    return None


def _evaluate_table(
    w: WordLike,
    columns: dict[Letter, int],
    jones: np.ndarray,
    circles: np.ndarray,
    prod: np.ndarray,
    removed: np.ndarray,
) -> tuple[np.ndarray, np.ndarray]:
    seq = w.letters
    acc_j = jones[:, columns[seq[0]]]
    acc_c = circles[:, columns[seq[0]]].copy()
    for letter in seq[1:]:
        nxt = jones[:, columns[letter]]
        acc_c += circles[:, columns[letter]] + removed[acc_j, nxt]
        acc_j = prod[acc_j, nxt]
    return acc_j, acc_c


def _random_table(search: _Search, monoid: JonesMonoid, budget: int, rng: np.random.Generator) -> Verdict | None:
    prod, removed = monoid.table
    columns = {letter: k for k, letter in enumerate(search.alphabet)}
    k = len(search.alphabet)
    remaining = budget
    while remaining > 0:
        size = min(BATCH_SIZE, remaining)
        jones = rng.integers(0, len(monoid), size=(size, k))
        circles = (rng.random((size, k)) < CIRCLE_RATE).astype(np.int64)
        lj, lc = _evaluate_table(search.identity.lhs, columns, jones, circles, prod, removed)
        rj, rc = _evaluate_table(search.identity.rhs, columns, jones, circles, prod, removed)
        differing = np.flatnonzero((lj != rj) | (lc != rc))
        if differing.size:
            row = int(differing[0])
            search.tried += row
            images = [
                ExtKauffmanElement(monoid.elements[int(jones[row, c])], int(circles[row, c])) for c in range(k)
            ]
            words = [element_word(monoid.names[int(jones[row, c])], int(circles[row, c])) for c in range(k)]
            return search.compare(images, words)
        search.tried += size
        remaining -= size
    return None


def _random_words(n: int, rng: np.random.Generator) -> Iterator[str]:
    while True:
        length = int(rng.integers(1, 2 * n))
        word = "".join(f"h{int(i)}" for i in rng.integers(1, n, size=length))
        if rng.random() < CIRCLE_RATE:
            word += CIRCLE
        yield word


def _random_scalar(search: _Search, budget: int, rng: np.random.Generator) -> Verdict | None:
    words = _random_words(search.n, rng)
    for _ in range(budget):
        chosen = [next(words) for _ in search.alphabet]
        images = [evaluate_generators(search.n, _names_with_circle(w)) for w in chosen]
        verdict = search.compare(images, chosen)
        if verdict is not None:
            return verdict
    return None


def _names_with_circle(word: str) -> list[str]:
    if word.endswith(CIRCLE):
        return _names(word[: -len(CIRCLE)]) + [CIRCLE]
    return _names(word)


def falsify_kn(
    identity: Identity,
    n: int,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
    table_rank_limit: int = DEFAULT_TABLE_RANK_LIMIT,
    max_rank: int = DEFAULT_MAX_RANK,
) -> Verdict | None:
    """Search for a substitution into K_n separating the two sides.

    Content mismatches are settled by sending the unbalanced letter to c.
    Otherwise every assignment from a small seed pool of hook words is tried
    first, then random planar elements (mostly circle-free) until the budget
    of substitutions is spent.

    Returns:
        A failing verdict with the witness, or None if none was found.
    """
    monoid = jones_monoid(n, max_rank) if n <= max_rank else None
    search = _Search(identity, n, f"Kn:{n}", monoid)

    verdict = _content_witness(search) or _seeded(search, budget)
    remaining = budget - search.tried
    if verdict is None and remaining > 0:
        rng = np.random.default_rng(seed)
        if monoid is not None and n <= table_rank_limit:
            verdict = _random_table(search, monoid, remaining, rng)
        else:
            verdict = _random_scalar(search, remaining, rng)

    logger.info(
        "Falsification finished",
        extra={"rank": n, "substitutions": search.tried, "found": verdict is not None},
    )
    return verdict
