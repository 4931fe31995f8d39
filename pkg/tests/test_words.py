# Copyright 2025 Altaira Labs
# SPDX-License-Identifier: Apache-2.0

"""Tests for letters, words and word statistics."""

import pickle

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kauffman_identities.errors import WordError
from kauffman_identities.words import (
    Identity,
    Letter,
    MaybeEmptyWord,
    Word,
    content,
    delete_letters,
    factor_counts,
    first_last,
    is_balanced,
    occ_factor,
    occurrences,
)

from .conftest import ALPHABET, words


class TestLetter:
    """Tests for interned letters."""

    def test_interned(self) -> None:
        """Test letters with the same name are the same object."""
        assert Letter("x") is Letter("x")
        assert Letter("x") is not Letter("y")

    def test_ordered_by_name(self) -> None:
        """Test letters sort by name, not by creation order."""
        late = Letter("a9")
        assert sorted([Letter("z"), late, Letter("b")]) == [late, Letter("b"), Letter("z")]

    def test_pickle_keeps_identity(self) -> None:
        """Test unpickling returns the interned letter."""
        assert pickle.loads(pickle.dumps(Letter("x"))) is Letter("x")

    def test_empty_name(self) -> None:
        """Test empty names are rejected."""
        with pytest.raises(WordError):
            Letter("")


class TestWord:
    """Tests for words and residues."""

    def test_empty_word_rejected(self) -> None:
        """Test a Word must be nonempty."""
        with pytest.raises(WordError):
            Word(())

    def test_str(self) -> None:
        """Test words print as concatenated names."""
        assert str(Word.of("xxyx")) == "xxyx"

    def test_residue_to_word(self) -> None:
        """Test an empty residue cannot become a word."""
        assert MaybeEmptyWord().is_empty
        with pytest.raises(WordError):
            MaybeEmptyWord().to_word()

    def test_identity_str_and_content(self) -> None:
        """Test identity text and content."""
        identity = Identity(Word.of("xxyx"), Word.of("xyxz"))
        assert str(identity) == "xxyx = xyxz"
        assert identity.content == {Letter("x"), Letter("y"), Letter("z")}


class TestStatistics:
    """Tests for content, occurrence counts and deletions."""

    def test_content(self) -> None:
        """Test the content of a word."""
        assert content(Word.of("xyxzx")) == {Letter("x"), Letter("y"), Letter("z")}

    def test_occurrences(self) -> None:
        """Test single-letter counts."""
        assert occurrences(Letter("x"), Word.of("xyxzx")) == 3
        assert occurrences(Letter("t"), Word.of("xyxzx")) == 0

    def test_occ_factor_overlapping(self) -> None:
        """Test length-2 factors are counted with overlaps."""
        assert occ_factor(Word.of("xx"), Word.of("xxxyx")) == 2
        assert occ_factor(Word.of("yx"), Word.of("xxxyx")) == 1
        assert occ_factor(Word.of("x"), Word.of("xxxyx")) == 4

    def test_occ_factor_too_long(self) -> None:
        """Test factors longer than two letters are rejected."""
        with pytest.raises(WordError):
            occ_factor(Word.of("xyx"), Word.of("xyxyx"))

    def test_delete_letters(self) -> None:
        """Test deletion keeps the order of the remaining letters."""
        assert str(delete_letters(Word.of("xyzxzy"), {Letter("z")})) == "xyxy"
        assert delete_letters(Word.of("xyx"), set()) == MaybeEmptyWord(Word.of("xyx").letters)
        assert delete_letters(Word.of("xx"), {Letter("x")}).is_empty

    def test_is_balanced(self) -> None:
        """Test balanced identities have equal letter counts."""
        assert is_balanced(Identity(Word.of("xxyx"), Word.of("xyxx")))
        assert not is_balanced(Identity(Word.of("xxx"), Word.of("xx")))

    def test_first_last(self) -> None:
        """Test first and last letters."""
        assert first_last(Word.of("xyz")) == (Letter("x"), Letter("z"))
        with pytest.raises(WordError):
            first_last(MaybeEmptyWord())

    @given(words(), st.sets(st.sampled_from(ALPHABET)), st.sets(st.sampled_from(ALPHABET)))
    def test_deletion_composes(self, w: Word, first: set[str], second: set[str]) -> None:
        """Test deleting Y then Z equals deleting their union."""
        y = {Letter(name) for name in first}
        z = {Letter(name) for name in second}
        assert delete_letters(delete_letters(w, y), z) == delete_letters(w, y | z)

    @given(words())
    def test_factor_counts_total(self, w: Word) -> None:
        """Test a word of length n has n - 1 length-2 factor occurrences."""
        assert sum(factor_counts(w).values()) == len(w) - 1

    @given(words())
    def test_occurrences_split_by_successor(self, w: Word) -> None:
        """Test each occurrence of x is followed by some letter or ends w."""
        last = w.letters[-1]
        for x in content(w):
            followed = sum(occ_factor((x, y), w) for y in content(w))
            assert occurrences(x, w) == followed + (1 if x == last else 0)
