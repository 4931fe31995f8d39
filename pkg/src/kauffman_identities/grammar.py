# Copyright 2025 Altaira Labs
# SPDX-License-Identifier: Apache-2.0

"""Text syntax for identities, generator words and diagram literals.

    identity  := word ('=' | '≐') word
    word      := item+
    item      := letter ('^' int | superscript)?
    letter    := [a-z][0-9]*

Generator words are juxtapositions of ``c``, ``d``, ``h<i>`` and ``id``
with optional ``^k`` repetition. Diagram literals are YAML flow mappings
such as ``{n: 4, pairs: [[1, 2], [3, "3'"], [4, "4'"], ["1'", "2'"]]}``.
"""

from __future__ import annotations

import re
from collections.abc import Iterator
from typing import NamedTuple

import yaml

from kauffman_identities.diagrams.kauffman import ExtKauffmanElement, evaluate_generators
from kauffman_identities.diagrams.wire import WireDiagram, from_mapping
from kauffman_identities.errors import DiagramError, GeneratorIndexError, ParseError
from kauffman_identities.words import Identity, Letter, Word

_SUPERSCRIPTS = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789")

_IDENTITY_TOKENS = re.compile(
    r"(?P<letter>[a-z][0-9]*)"
    r"|(?P<power>\^)"
    r"|(?P<int>[0-9]+)"
    r"|(?P<sup>[⁰¹²³⁴⁵⁶⁷⁸⁹]+)"
    r"|(?P<sep>=|≐)"
    r"|(?P<ws>\s+)"
    r"|(?P<mismatch>.)"
)

_GENERATOR_TOKENS = re.compile(
    r"(?P<gen>id|h[0-9]+|c|d)"
    r"|(?P<power>\^)"
    r"|(?P<int>[0-9]+)"
    r"|(?P<ws>[\s*·]+)"
    r"|(?P<mismatch>.)"
)


class Token(NamedTuple):
    type: str
    value: str
    position: int


def _tokenize(pattern: re.Pattern[str], source: str) -> Iterator[Token]:
    for mo in pattern.finditer(source):
        kind = str(mo.lastgroup)
        if kind == "ws":
            continue
        if kind == "mismatch":
            raise ParseError(f"unexpected character '{mo.group()}'", source, mo.start())
        yield Token(kind, mo.group(), mo.start())


class _TokenStream:
    def __init__(self, source: str, tokens: list[Token]):
        self.source = source
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def end_position(self) -> int:
        return len(self.source.rstrip())

    def error(self, message: str, expected: str) -> ParseError:
        token = self.peek()
        position = token.position if token else self.end_position()
        return ParseError(message, self.source, position, expected)

    def exponent(self) -> int:
        """Optional ``^k`` or superscript after an item; 1 if absent."""
        token = self.peek()
        if token is None:
            return 1
        if token.type == "sup":
            self.advance()
            value = int(token.value.translate(_SUPERSCRIPTS))
        elif token.type == "power":
            self.advance()
            number = self.peek()
            if number is None or number.type != "int":
                raise self.error("missing exponent", "integer")
            self.advance()
            value = int(number.value)
        else:
            return 1
        if value < 1:
            raise ParseError("exponent must be positive", self.source, token.position, "integer >= 1")
        return value


def _word(stream: _TokenStream) -> Word:
    letters: list[Letter] = []
    while (token := stream.peek()) is not None and token.type == "letter":
        stream.advance()
        letters.extend([Letter(token.value)] * stream.exponent())
    if not letters:
        raise stream.error("expected a word", "letter")
    return Word(tuple(letters))


def parse_word(source: str) -> Word:
    """Parse a single word such as ``"x^2yx"``.

    Raises:
        ParseError: On malformed input.
    """
    stream = _TokenStream(source, list(_tokenize(_IDENTITY_TOKENS, source)))
    word = _word(stream)
    if stream.peek() is not None:
        raise stream.error("unexpected trailing input", "end of word")
    return word


def parse_identity(source: str) -> Identity:
    """Parse ``"xxyx = xyxx"`` (``≐`` also separates).

    Raises:
        ParseError: On malformed input, with the offending position.
    """
    stream = _TokenStream(source, list(_tokenize(_IDENTITY_TOKENS, source)))
    lhs = _word(stream)
    token = stream.peek()
    if token is None or token.type != "sep":
        raise stream.error("missing identity separator", "'=' or '≐'")
    stream.advance()
    rhs = _word(stream)
    if stream.peek() is not None:
        raise stream.error("unexpected trailing input", "end of identity")
    return Identity(lhs, rhs)


def format_identity(identity: Identity) -> str:
    """Canonical text; parses back to the same identity."""
    return str(identity)


def parse_generator_word(source: str) -> list[str]:
    """Expand a generator word such as ``"h1^2 c h3"`` into generator names.

    Raises:
        ParseError: On malformed input.
    """
    stream = _TokenStream(source, list(_tokenize(_GENERATOR_TOKENS, source)))
    names: list[str] = []
    while (token := stream.peek()) is not None:
        if token.type != "gen":
            raise stream.error(f"unexpected '{token.value}'", "generator c, d, h<i> or id")
        stream.advance()
        names.extend([token.value] * stream.exponent())
    if not names:
        raise stream.error("expected a generator word", "generator c, d, h<i> or id")
    return names


def parse_diagram_literal(source: str) -> WireDiagram:
    """Parse a ``{n: ..., pairs: [...], circles: ...}`` literal.

    Raises:
        ParseError: If the text is not a valid literal.
    """
    try:
        data = yaml.safe_load(source)
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        position = mark.column if mark is not None and mark.line == 0 else None
        raise ParseError("malformed diagram literal", source, position, "YAML flow mapping") from e
    if not isinstance(data, dict):
        raise ParseError("diagram literal must be a mapping", source, 0, "'{'")
    try:
        return from_mapping(data)
    except DiagramError as e:
        raise ParseError(f"invalid diagram: {e}", source) from e


def is_diagram_literal(source: str) -> bool:
    return source.lstrip().startswith("{")


def parse_operand(source: str, rank: int) -> WireDiagram | ExtKauffmanElement:
    """Parse a diagram literal or evaluate a generator word at the given rank.

    Raises:
        ParseError: On malformed input or an out-of-range generator.
    """
    if is_diagram_literal(source):
        return parse_diagram_literal(source)
    names = parse_generator_word(source)
    try:
        return evaluate_generators(rank, names)
    except GeneratorIndexError as e:
        raise ParseError(str(e), source, None, f"h1..h{rank - 1}") from e
