import pytest
from hypothesis import given, strategies as st

from trapeze import (
    EmptyPatternError,
    NotAFactorError,
    ParseError,
    all_factors,
    alphabet,
    alphabet_size,
    factors_of_length,
    is_factor,
    is_palindrome,
    occurrence_count,
    occurrence_positions,
    parse_word,
    require_factor,
    reverse,
)

import oracles

words = st.text(alphabet="abcd", max_size=10)


def test_parse_word_accepts_lowercase():
    assert parse_word("abba") == "abba"
    assert parse_word("") == ""


@pytest.mark.parametrize("bad", ["Abba", "ab1", "a b", "a\n", "é"])
def test_parse_word_rejects_other_characters(bad):
    with pytest.raises(ParseError):
        parse_word(bad)


def test_parse_word_rejects_non_strings():
    with pytest.raises(ParseError):
        parse_word(b"abc")


def test_alphabet():
    assert alphabet("banana") == frozenset("abn")
    assert alphabet_size("banana") == 3
    assert alphabet("") == frozenset()


def test_factors_of_length():
    assert factors_of_length("aab", 2) == {"aa", "ab"}
    assert factors_of_length("aab", 0) == {""}
    assert factors_of_length("aab", 4) == set()
    with pytest.raises(ValueError):
        factors_of_length("aab", -1)


@given(words)
def test_all_factors_matches_oracle(w):
    assert all_factors(w) == oracles.factors(w)


def test_occurrences_overlapping():
    assert occurrence_positions("aa", "aaaa") == [0, 1, 2]
    assert occurrence_count("aba", "ababa") == 2
    assert occurrence_positions("b", "aaa") == []


def test_occurrences_reject_empty_pattern():
    with pytest.raises(EmptyPatternError):
        occurrence_positions("", "abc")


def test_require_factor():
    require_factor("ab", "cabc")
    with pytest.raises(NotAFactorError):
        require_factor("ba", "aab")
    with pytest.raises(EmptyPatternError):
        require_factor("", "aab")


@given(words)
def test_reverse_involution(w):
    assert reverse(reverse(w)) == w
    assert is_factor(reverse(w)[:2], reverse(w)) or len(w) < 2


def test_is_palindrome():
    assert is_palindrome("")
    assert is_palindrome("abba")
    assert not is_palindrome("ab")
