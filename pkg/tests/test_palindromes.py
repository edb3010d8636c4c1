import pytest
from hypothesis import given, strategies as st

from trapeze import (
    EmptyWordError,
    NotAFactorError,
    complete_returns,
    is_rich_by_count,
    is_rich_by_returns,
    is_rich_by_ups,
    longest_palindromic_prefix,
    longest_palindromic_suffix,
    palindrome_index,
    palindromic_factors,
)

import oracles

words = st.text(alphabet="abc", max_size=11)
nonempty = st.text(alphabet="abc", min_size=1, max_size=11)


@given(words)
def test_palindromic_factors_match_oracle(w):
    assert palindromic_factors(w) == oracles.pal_factors(w)


@given(words)
def test_richness_routes_agree_with_oracle(w):
    want = oracles.is_rich(w)
    assert is_rich_by_count(w) == want
    assert is_rich_by_ups(w) == want
    assert is_rich_by_returns(w) == want


@given(words)
def test_palindrome_count_never_exceeds_length_plus_one(w):
    assert len(palindromic_factors(w)) <= len(w) + 1


def test_known_rich_and_nonrich():
    assert is_rich_by_count("abacabade")
    assert is_rich_by_count("aaabab")
    assert not is_rich_by_count("ababadbc")
    assert not is_rich_by_count("abacbab")
    assert not is_rich_by_count("aabca")


def test_palindrome_index_structure():
    idx = palindrome_index("abba")
    assert idx.palindromes == frozenset({"", "a", "b", "bb", "abba"})
    assert idx.count == 5
    assert idx.counts_by_length == (1, 2, 1, 0, 1)
    # each prefix of a rich word ends in a fresh palindromic suffix
    assert all(fresh for _, fresh in idx.prefix_suffixes)
    assert [q for q, _ in idx.prefix_suffixes] == ["a", "b", "bb", "abba"]


def test_prefix_suffix_detects_recurrence():
    # aababbaa is a shortest non-rich binary word; its full-length prefix
    # ends in "aa", which already occurred at the start
    idx = palindrome_index("aababbaa")
    q, fresh = idx.prefix_suffixes[7]
    assert q == "aa"
    assert not fresh
    assert not is_rich_by_count("aababbaa")


@given(nonempty)
def test_complete_returns_match_oracle(w):
    for u in sorted(oracles.pal_factors(w) - {""})[:8]:
        assert complete_returns(w, u) == oracles.complete_returns(w, u)


def test_complete_returns_examples():
    assert complete_returns("ababa", "a") == ["aba", "aba"]
    assert complete_returns("ababa", "aba") == ["ababa"]
    assert complete_returns("abc", "b") == []
    with pytest.raises(NotAFactorError):
        complete_returns("abc", "d")


@given(nonempty)
def test_longest_palindromic_affixes(w):
    assert longest_palindromic_prefix(w) == oracles.lpp(w)
    assert longest_palindromic_suffix(w) == oracles.lps(w)


def test_affixes_reject_empty():
    with pytest.raises(EmptyWordError):
        longest_palindromic_prefix("")
    with pytest.raises(EmptyWordError):
        longest_palindromic_suffix("")


@given(words)
def test_richness_is_reversal_invariant(w):
    assert is_rich_by_count(w) == is_rich_by_count(w[::-1])
