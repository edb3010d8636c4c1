import pytest
from hypothesis import given, strategies as st

from trapeze import (
    AlphabetTooSmallError,
    EmptyWordError,
    NotGTWordError,
    complexity_profile,
    gt_factor_closure_check,
    heart,
    heart_decompose,
    is_gt,
    is_gt_by_definition,
    is_gt_by_heart,
    is_gt_by_heart_lh,
    is_triangular,
    satisfies_rk_condition,
    shape_from_profile,
    word_parameters,
)

import oracles

words = st.text(alphabet="abc", min_size=1, max_size=10)


@given(words)
def test_heart_matches_oracle(w):
    d = heart_decompose(w)
    assert (d.prefix, d.heart, d.suffix) == oracles.heart(w)
    assert d.word == w


def test_heart_known_values():
    assert heart_decompose("ebbacbadf").heart == "bbacba"
    assert heart_decompose("abcd") == heart_decompose("abcd")
    assert heart_decompose("abcd").prefix == ""
    assert heart("ababadac") == "ababada"
    assert heart("aaabb") == "aaabb"


def test_heart_strips_only_unioccurrent_runs():
    d = heart_decompose("deaab")
    assert d.prefix == "de" and d.heart == "aa" and d.suffix == "b"


@given(words)
def test_gt_definition_matches_pair_search(w):
    shape = is_gt_by_definition(w)
    pairs = oracles.gt_pairs(w)
    if shape is None:
        assert pairs == []
    else:
        assert (shape.m, shape.M) in pairs


@given(words)
def test_gt_characterizations_agree(w):
    a = is_gt(w)
    assert is_gt_by_heart(w) == a
    assert is_gt_by_heart_lh(w) == a


@given(words)
def test_rk_condition_implies_gt(w):
    if satisfies_rk_condition(w):
        assert is_gt(w)


def test_rk_condition_not_necessary():
    # GT with a heart strictly shorter than the word
    assert is_gt("ababadac")
    assert not satisfies_rk_condition("ababadac")
    assert satisfies_rk_condition(heart("ababadac"))


@given(words)
def test_heart_plateau_equality(w):
    shape = is_gt_by_definition(w)
    if shape is None or len(set(w)) < 2:
        return
    v = heart(w)
    p = word_parameters(v)
    assert shape.m == min(p.R, p.K)
    assert shape.M == max(p.R, p.K)


def test_shape_from_profile_template():
    assert shape_from_profile([1, 2, 3, 3, 2, 1], 2).m == 2
    assert shape_from_profile([1, 2, 3, 3, 2, 1], 2).M == 3
    assert shape_from_profile([1, 1, 1, 1], 1).M == 3
    assert shape_from_profile([1, 2, 2, 3, 2, 1], 2) is None


def test_one_letter_words_are_gt():
    shape = is_gt_by_definition("aaaa")
    assert shape is not None
    assert (shape.m, shape.M) == (1, 4)
    with pytest.raises(AlphabetTooSmallError):
        is_triangular("aaaa")


def test_all_distinct_words_are_gt():
    shape = is_gt_by_definition("abcde")
    assert shape is not None
    assert (shape.m, shape.M) == (1, 1)
    assert is_triangular("abcde")


def test_triangular_examples():
    assert is_triangular("ab")
    assert is_triangular("aabb")
    assert is_triangular("abbcc")
    assert not is_triangular("aaabb")
    assert not is_triangular("abb")


@given(words)
def test_gt_closed_under_reversal(w):
    assert is_gt(w) == is_gt(w[::-1])


@given(words)
def test_gt_factor_closure(w):
    if is_gt(w):
        assert gt_factor_closure_check(w)
    else:
        with pytest.raises(NotGTWordError):
            gt_factor_closure_check(w)


def test_non_gt_example():
    # aabba has four distinct factors of length 2, one more than the
    # template allows at that point
    assert list(complexity_profile("aabba").values) == [1, 2, 4, 3, 2, 1]
    assert not is_gt("aabba")
    assert is_gt("aabb")


def test_empty_word_rejected():
    for fn in (heart_decompose, is_gt_by_definition, satisfies_rk_condition,
               is_gt_by_heart, is_gt_by_heart_lh, is_triangular):
        with pytest.raises(EmptyWordError):
            fn("")
