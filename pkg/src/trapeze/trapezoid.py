"""Generalized trapezoidal (GT) structure of finite words.

A word is GT when its complexity profile climbs by one per step up to some
length m, stays constant up to some M, then descends by one per step to the
end. The heart of a word is what remains after stripping the longest prefix
and suffix made of letters that occur exactly once; the GT property and the
plateau endpoints only depend on the heart.
"""

from collections import Counter
from dataclasses import dataclass

from .errors import AlphabetTooSmallError, EmptyWordError, NotGTWordError
from .words import parse_word
from .complexity import profile_and_params


@dataclass(frozen=True)
class TrapezoidShape:
    """Plateau endpoints (m, M) and the plateau height of a GT profile."""

    m: int
    M: int
    plateau_height: int


@dataclass(frozen=True)
class HeartDecomposition:
    """w = prefix + heart + suffix.

    The prefix (resp. suffix) is the longest leading (resp. trailing) run of
    letters that each occur exactly once in the whole word. When every letter
    of w is distinct the heart is w itself and both affixes are empty, so the
    concatenation identity always holds.
    """

    prefix: str
    heart: str
    suffix: str

    @property
    def word(self):
        return self.prefix + self.heart + self.suffix


def heart_decompose(w: str) -> HeartDecomposition:
    w = parse_word(w)
    if not w:
        raise EmptyWordError("the empty word has no heart")
    if len(set(w)) == len(w):
        return HeartDecomposition("", w, "")
    counts = Counter(w)
    i = 0
    while counts[w[i]] == 1:
        i += 1
    j = len(w)
    while counts[w[j - 1]] == 1:
        j -= 1
    return HeartDecomposition(w[:i], w[i:j], w[j:])


def heart(w: str) -> str:
    return heart_decompose(w).heart


def shape_from_profile(values, k: int):
    """TrapezoidShape if the profile fits the GT template, else None.

    ``values`` is C(0..n) and ``k`` the alphabet size. The template is
    checked literally: C(i) = k + i - 1 up to m, constant on [m, M],
    then down by exactly one per step.
    """
    n = len(values) - 1
    if k == 1:
        # a one-letter word has profile 1,1,...,1
        return TrapezoidShape(1, n, 1)
    peak = max(values)
    m = values.index(peak)
    M = n - values[::-1].index(peak)
    for i in range(1, m + 1):
        if values[i] != k + i - 1:
            return None
    for i in range(m, M):
        if values[i] != peak:
            return None
    for i in range(M, n):
        if values[i + 1] != values[i] - 1:
            return None
    return TrapezoidShape(m, M, peak)


def is_gt_by_definition(w: str):
    """TrapezoidShape if w is GT per the profile template, else None."""
    w = parse_word(w)
    if not w:
        raise EmptyWordError("the empty word is not classified")
    values, _, _ = profile_and_params(w)
    return shape_from_profile(values, len(set(w)))


def is_gt(w: str) -> bool:
    return is_gt_by_definition(w) is not None


def satisfies_rk_condition(w: str) -> bool:
    """|w| == R + K + |Alph(w)| - 2, a sufficient condition for GT."""
    w = parse_word(w)
    if not w:
        raise EmptyWordError("the empty word is not classified")
    _, r, k_param = profile_and_params(w)
    return len(w) == r + k_param + len(set(w)) - 2


def is_gt_by_heart(w: str) -> bool:
    """GT test via the heart: |w| == R_v + K_v + |Alph(w)| - 2."""
    w = parse_word(w)
    if not w:
        raise EmptyWordError("the empty word is not classified")
    v = heart_decompose(w).heart
    _, rv, kv = profile_and_params(v)
    return len(w) == rv + kv + len(set(w)) - 2


def is_gt_by_heart_lh(w: str) -> bool:
    """Left-side dual of the heart test: |w| == L_v + H_v + |Alph(w)| - 2."""
    w = parse_word(w)
    if not w:
        raise EmptyWordError("the empty word is not classified")
    v = heart_decompose(w).heart
    _, lv, hv = profile_and_params(v[::-1])
    return len(w) == lv + hv + len(set(w)) - 2


def is_triangular(w: str) -> bool:
    """Profile forms a triangle: the heart has R_v == K_v.

    Needs at least two distinct letters; one-letter profiles are flat.
    """
    w = parse_word(w)
    if not w:
        raise EmptyWordError("the empty word is not classified")
    if len(set(w)) < 2:
        raise AlphabetTooSmallError("triangularity needs >= 2 distinct letters")
    v = heart_decompose(w).heart
    _, rv, kv = profile_and_params(v)
    if len(w) != rv + kv + len(set(w)) - 2:
        return False
    return rv == kv


def gt_factor_closure_check(w: str) -> bool:
    """Every non-empty factor of a GT word is GT; verified exhaustively."""
    w = parse_word(w)
    shape = is_gt_by_definition(w)
    if shape is None:
        raise NotGTWordError(f"{w!r} is not generalized trapezoidal")
    seen = set()
    for i in range(len(w)):
        for j in range(i + 1, len(w) + 1):
            u = w[i:j]
            if u in seen:
                continue
            seen.add(u)
            values, _, _ = profile_and_params(u)
            if shape_from_profile(values, len(set(u))) is None:
                return False
    return True
