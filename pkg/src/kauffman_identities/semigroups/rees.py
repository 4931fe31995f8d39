# Copyright 2025 Altaira Labs
# SPDX-License-Identifier: Apache-2.0

"""Rees matrix semigroups over cyclic groups.

Elements are triples (i, g, lam) with i in I = {1..|I|}, lam in Lambda =
{1..|Lambda|} and g in the group, plus a zero when the sandwich matrix has
zero entries. The product is

    (i, g, lam) * (j, h, mu) = (i, g p[lam][j] h, mu)

and zero whenever p[lam][j] is zero.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from kauffman_identities.errors import RmsIndexError, UnknownSemigroupError
from kauffman_identities.semigroups.base import Semigroup
from kauffman_identities.words import Identity, Letter, WordLike, factor_counts, first_last

# Group elements: powers of a fixed generator c.


@dataclass(frozen=True)
class CyclicMod:
    """Element c^residue of the cyclic group of order ``modulus``."""

    modulus: int
    residue: int = 0

    def __post_init__(self) -> None:
        if self.modulus < 1 or not 0 <= self.residue < self.modulus:
            raise ValueError(f"Invalid residue {self.residue} mod {self.modulus}")

    def __mul__(self, other: CyclicMod) -> CyclicMod:
        if not isinstance(other, CyclicMod) or other.modulus != self.modulus:
            raise TypeError("Cannot multiply elements of different groups")
        return CyclicMod(self.modulus, (self.residue + other.residue) % self.modulus)

    @property
    def exponent(self) -> int:
        return self.residue

    def __str__(self) -> str:
        return _power_text(self.residue)


@dataclass(frozen=True)
class CyclicInt:
    """Element c^exponent of the infinite cyclic group."""

    exponent: int = 0

    def __mul__(self, other: CyclicInt) -> CyclicInt:
        if not isinstance(other, CyclicInt):
            raise TypeError("Cannot multiply elements of different groups")
        return CyclicInt(self.exponent + other.exponent)

    def __str__(self) -> str:
        return _power_text(self.exponent)


AbelianGroupElement = CyclicMod | CyclicInt

E = CyclicMod(1, 0)


def _power_text(k: int) -> str:
    if k == 0:
        return "e"
    if k == 1:
        return "c"
    return f"c^{k}"


class _Zero:
    """The adjoined zero."""

    _instance: _Zero | None = None

    def __new__(cls) -> _Zero:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ZERO"

    def __str__(self) -> str:
        return "0"


ZERO = _Zero()


@dataclass(frozen=True)
class Triple:
    """Nonzero element (i, g, lam)."""

    i: int
    g: AbelianGroupElement
    lam: int

    def __str__(self) -> str:
        return f"({self.i},{self.g},{self.lam})"


RmsElement = Triple | _Zero


@dataclass(frozen=True)
class SandwichMatrix:
    """Lambda x I matrix over the group with zeros written as None."""

    entries: tuple[tuple[AbelianGroupElement | None, ...], ...]

    def __post_init__(self) -> None:
        widths = {len(row) for row in self.entries}
        if not self.entries or len(widths) != 1 or 0 in widths:
            raise ValueError("Sandwich matrix must be a nonempty rectangle")

    @property
    def rows(self) -> int:
        """|Lambda|."""
        return len(self.entries)

    @property
    def columns(self) -> int:
        """|I|."""
        return len(self.entries[0])

    @property
    def has_zero(self) -> bool:
        return any(p is None for row in self.entries for p in row)

    def __call__(self, lam: int, i: int) -> AbelianGroupElement | None:
        """Entry p[lam][i] (1-based)."""
        if not (1 <= lam <= self.rows and 1 <= i <= self.columns):
            raise RmsIndexError(f"Sandwich entry ({lam},{i}) outside {self.rows}x{self.columns}")
        return self.entries[lam - 1][i - 1]


class ReesMatrixSemigroup(Semigroup[RmsElement]):
    """M(I, G, Lambda; P), with a zero adjoined when P has zero entries."""

    def __init__(self, name: str, matrix: SandwichMatrix, infinite_group: bool):
        self._name = name
        self.matrix = matrix
        self.infinite_group = infinite_group

    @property
    def name(self) -> str:
        return self._name

    @property
    def index_set(self) -> range:
        """I."""
        return range(1, self.matrix.columns + 1)

    @property
    def lambda_set(self) -> range:
        """Lambda."""
        return range(1, self.matrix.rows + 1)

    def group_element(self, exponent: int) -> AbelianGroupElement:
        """The power c^exponent in this semigroup's group."""
        if self.infinite_group:
            return CyclicInt(exponent)
        modulus = self._modulus()
        return CyclicMod(modulus, exponent % modulus)

    def _modulus(self) -> int:
        for row in self.matrix.entries:
            for p in row:
                if isinstance(p, CyclicMod):
                    return p.modulus
        return 1

    def triple(self, i: int, exponent: int, lam: int) -> Triple:
        """Validated triple (i, c^exponent, lam).

        Raises:
            RmsIndexError: If i or lam is out of range.
        """
        if i not in self.index_set or lam not in self.lambda_set:
            raise RmsIndexError(f"Triple ({i}, _, {lam}) outside {self.matrix.columns}x{self.matrix.rows}")
        return Triple(i, self.group_element(exponent), lam)

    def multiply(self, a: RmsElement, b: RmsElement) -> RmsElement:
        """Sandwich product.

        Raises:
            RmsIndexError: If an index lies outside the matrix.
        """
        if isinstance(a, _Zero) or isinstance(b, _Zero):
            return ZERO
        p = self.matrix(a.lam, b.i)
        if p is None:
            return ZERO
        return Triple(a.i, a.g * p * b.g, b.lam)  # type: ignore[operator]

    def elements(self, exponents: Sequence[int] = range(-2, 3)) -> Iterator[RmsElement]:
        """All elements, with group exponents restricted to ``exponents`` for C-infinity.

        The slice is exact for finite groups; for the infinite cyclic group it
        is a truncation and is not closed under multiplication.
        """
        if self.matrix.has_zero:
            yield ZERO
        if self.infinite_group:
            group = [CyclicInt(k) for k in exponents]
        else:
            modulus = self._modulus()
            group = [CyclicMod(modulus, k) for k in range(modulus)]
        for i, g, lam in itertools.product(self.index_set, group, self.lambda_set):
            yield Triple(i, g, lam)

    def __repr__(self) -> str:
        return f"ReesMatrixSemigroup({self._name!r})"


def _matrix(rows: list[list[int | None]], infinite: bool) -> SandwichMatrix:
    def entry(k: int | None) -> AbelianGroupElement | None:
        if k is None:
            return None
        return CyclicInt(k) if infinite else E

    return SandwichMatrix(tuple(tuple(entry(k) for k in row) for row in rows))


# Matrix entries as exponents of c; None marks zero.
_BUILTINS: dict[str, tuple[list[list[int | None]], bool]] = {
    "M3": ([[0, 0, None], [0, 0, 0], [None, 0, 0]], False),
    "RC2": ([[2, 1], [1, 2]], True),
    "MC3": ([[1, 0, None], [0, 1, 0], [None, 0, 1]], True),
    "RB2x2": ([[0, 0], [0, 0]], False),
    "S": ([[0, 1], [0, 0]], True),
}


def builtin(name: str) -> ReesMatrixSemigroup:
    """Named instance: M3, RC2, MC3, RB2x2, or the witness semigroup S.

    Raises:
        UnknownSemigroupError: If the name is not a builtin.
    """
    try:
        rows, infinite = _BUILTINS[name]
    except KeyError:
        raise UnknownSemigroupError(name, sorted(_BUILTINS)) from None
    return ReesMatrixSemigroup(name, _matrix(rows, infinite), infinite)


def proof_semigroup() -> ReesMatrixSemigroup:
    """M({1,2}, C-infinity, {1,2}; (e c / e e)), where all separating substitutions live."""
    return builtin("S")


def check_identity_rms_abelian(identity: Identity) -> bool:
    """Same first letter, same last letter, and equal counts of every length-2 factor."""
    lhs, rhs = identity.sides
    return (
        first_last(lhs) == first_last(rhs)
        and factor_counts(lhs) == factor_counts(rhs)
    )


def check_identity_m3(identity: Identity) -> bool:
    """Same first letter, same last letter, and the same set of length-2 factors."""
    lhs, rhs = identity.sides
    return (
        first_last(lhs) == first_last(rhs)
        and set(factor_counts(lhs)) == set(factor_counts(rhs))
    )


@dataclass(frozen=True)
class RmsWitness:
    """A substitution into the witness semigroup separating the two sides."""

    construction: str
    substitution: dict[Letter, Triple]
    lhs_value: RmsElement
    rhs_value: RmsElement

    def assignments(self) -> list[tuple[str, str]]:
        return [(letter.name, str(value)) for letter, value in sorted(self.substitution.items())]


def _separate(
    semigroup: ReesMatrixSemigroup,
    identity: Identity,
    construction: str,
    substitution: dict[Letter, Triple],
) -> RmsWitness | None:
    lhs = semigroup.evaluate(identity.lhs, substitution)
    rhs = semigroup.evaluate(identity.rhs, substitution)
    if lhs == rhs:
        return None
    return RmsWitness(construction, substitution, lhs, rhs)


def witness_rms(identity: Identity) -> RmsWitness | None:
    """Substitution into S under which the sides differ, or None if none of the constructions applies.

    The constructions, tried in order:
      alpha: first letter of lhs to (1,e,1), other letters to (2,e,2);
      omega: the same with the last letter;
      theta: y to (1,e,1), z to (2,e,2), other letters to (1,e,2), for a
        factor yz (y != z) with different counts; the middle entry is
        c^(occurrences of yz);
      psi: y to (2,e,1), other letters to (1,e,2), for a square yy with
        different counts.
    """
    s = proof_semigroup()
    alphabet = sorted(identity.content)
    lhs, rhs = identity.sides

    def assign(special: dict[Letter, Triple], default: Triple) -> dict[Letter, Triple]:
        return {x: special.get(x, default) for x in alphabet}

    one, two, cross, back = s.triple(1, 0, 1), s.triple(2, 0, 2), s.triple(1, 0, 2), s.triple(2, 0, 1)

    (lhs_first, lhs_last), (rhs_first, rhs_last) = first_last(lhs), first_last(rhs)
    if lhs_first is not rhs_first:
        return _separate(s, identity, "alpha", assign({lhs_first: one}, two))
    if lhs_last is not rhs_last:
        return _separate(s, identity, "omega", assign({lhs_last: one}, two))

    lhs_counts, rhs_counts = factor_counts(lhs), factor_counts(rhs)
    for y, z in sorted(set(lhs_counts) | set(rhs_counts), key=lambda f: (f[0].name, f[1].name)):
        if lhs_counts[(y, z)] == rhs_counts[(y, z)]:
            continue
        if y is z:
            return _separate(s, identity, "psi", assign({y: back}, cross))
        return _separate(s, identity, "theta", assign({y: one, z: two}, cross))
    return None


def rms_evaluate(semigroup: ReesMatrixSemigroup, w: WordLike, substitution: dict[Letter, RmsElement]) -> RmsElement:
    """Value of a word under a substitution into a Rees matrix semigroup."""
    return semigroup.evaluate(w, substitution)
