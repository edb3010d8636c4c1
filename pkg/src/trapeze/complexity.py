"""Factor complexity and special-factor parameters.

The profile C(n) counts distinct factors of each length. The runtime path
builds a suffix automaton (linear size, online construction) and derives:

- C(n) for all n, via the [shortest, longest] length range of each state;
- R, the smallest positive length with no right special factor, from the
  transition out-degrees;
- K, the length of the shortest suffix occurring exactly once, from
  occurrence counts along the suffix-link path of the last state.

Left-side values L and H are the same quantities on the reversed word.
"""

from dataclasses import dataclass

from .errors import EmptyWordError, NotAFactorError
from .words import occurrence_count, parse_word


def _automaton(w):
    """Suffix automaton of ``w`` as parallel arrays.

    Returns (len_, link, trans, occ, last) where occ[s] is 1 on primary
    states and 0 on clones; after propagation occ[s] is the number of
    occurrences of the factors stored in state s.
    """
    len_ = [0]
    link = [-1]
    trans = [{}]
    occ = [0]
    last = 0
    for c in w:
        cur = len(len_)
        len_.append(len_[last] + 1)
        link.append(-1)
        trans.append({})
        occ.append(1)
        p = last
        while p != -1 and c not in trans[p]:
            trans[p][c] = cur
            p = link[p]
        if p == -1:
            link[cur] = 0
        else:
            q = trans[p][c]
            if len_[p] + 1 == len_[q]:
                link[cur] = q
            else:
                clone = len(len_)
                len_.append(len_[p] + 1)
                link.append(link[q])
                trans.append(dict(trans[q]))
                occ.append(0)
                while p != -1 and trans[p].get(c) == q:
                    trans[p][c] = clone
                    p = link[p]
                link[q] = clone
                link[cur] = clone
        last = cur
    return len_, link, trans, occ, last


def _propagate_occurrences(len_, link, occ):
    # process states longest-first so each state's count is final before
    # being added to its suffix link
    buckets = [[] for _ in range(max(len_) + 1)]
    for s in range(1, len(len_)):
        buckets[len_[s]].append(s)
    for bucket in reversed(buckets):
        for s in bucket:
            t = link[s]
            if t > 0:
                occ[t] += occ[s]


def profile_and_params(w):
    """One automaton pass: (profile values, R, K) for non-empty ``w``."""
    n = len(w)
    len_, link, trans, occ, last = _automaton(w)

    diff = [0] * (n + 2)
    rmax = 0
    for s in range(1, len(len_)):
        diff[len_[link[s]] + 1] += 1
        diff[len_[s] + 1] -= 1
        if len(trans[s]) >= 2:
            ls = len_[s]
            if ls > rmax:
                rmax = ls
    values = [1]
    acc = 0
    for ell in range(1, n + 1):
        acc += diff[ell]
        values.append(acc)

    _propagate_occurrences(len_, link, occ)
    s = last
    k_val = n
    while s > 0 and occ[s] == 1:
        k_val = len_[link[s]] + 1
        s = link[s]

    return values, rmax + 1, k_val


@dataclass(frozen=True)
class ComplexityProfile:
    """C(0..|w|) as a tuple; C(0) = 1 and C(|w|) = 1."""

    values: tuple

    @property
    def word_length(self):
        return len(self.values) - 1

    @property
    def max_value(self):
        return max(self.values)

    def rows(self):
        """(n, C(n)) pairs, handy for CSV output."""
        return list(enumerate(self.values))


@dataclass(frozen=True)
class WordParameters:
    """R/K and their left-side duals L/H.

    R: smallest positive length with no right special factor.
    K: length of the shortest suffix occurring exactly once.
    L and H are R and K of the reversed word.
    """

    R: int
    K: int
    L: int
    H: int


def _require_nonempty(w):
    if not w:
        raise EmptyWordError("operation needs a non-empty word")


def complexity_profile(w: str) -> ComplexityProfile:
    """Factor complexity profile of ``w``, computed from the automaton."""
    w = parse_word(w)
    _require_nonempty(w)
    values, _, _ = profile_and_params(w)
    return ComplexityProfile(tuple(values))


def word_parameters(w: str) -> WordParameters:
    w = parse_word(w)
    _require_nonempty(w)
    _, r, k = profile_and_params(w)
    _, l, h = profile_and_params(w[::-1])
    return WordParameters(r, k, l, h)


def right_valence(w: str, u: str) -> int:
    """Number of distinct letters x with u+x a factor of w."""
    w = parse_word(w)
    if u not in w:
        raise NotAFactorError(f"{u!r} does not occur in {w!r}")
    return sum(1 for x in set(w) if u + x in w)


def left_valence(w: str, u: str) -> int:
    """Number of distinct letters x with x+u a factor of w."""
    w = parse_word(w)
    if u not in w:
        raise NotAFactorError(f"{u!r} does not occur in {w!r}")
    return sum(1 for x in set(w) if x + u in w)


def _right_extension_tables(w):
    """length -> {factor: set of following letters}, lengths 1..|w|-1."""
    n = len(w)
    tables = {}
    for ell in range(1, n):
        d = {}
        for i in range(n - ell):
            u = w[i:i + ell]
            c = w[i + ell]
            s = d.get(u)
            if s is None:
                d[u] = {c}
            else:
                s.add(c)
        tables[ell] = d
    return tables


def _left_extension_tables(w):
    """length -> {factor: set of preceding letters}, lengths 1..|w|-1."""
    n = len(w)
    tables = {}
    for ell in range(1, n):
        d = {}
        for i in range(1, n - ell + 1):
            u = w[i:i + ell]
            c = w[i - 1]
            s = d.get(u)
            if s is None:
                d[u] = {c}
            else:
                s.add(c)
        tables[ell] = d
    return tables


@dataclass(frozen=True)
class SpecialFactorReport:
    """Materialized special-factor structure of a word.

    right_special and left_special map length -> sorted (factor, valence)
    pairs, only for lengths that have at least one special factor. The
    left side is obtained from the reversed word and checked against a
    direct scan in the tests. bispecial lists factors special on both sides.
    """

    word: str
    R: int
    K: int
    L: int
    H: int
    right_special: dict
    left_special: dict
    bispecial: tuple


def _special_side(w):
    """(specials by length, R, K) from the right extension tables of w."""
    n = len(w)
    tables = _right_extension_tables(w)
    specials = {}
    rmax = 0
    for ell, d in tables.items():
        pairs = sorted((u, len(s)) for u, s in d.items() if len(s) >= 2)
        if pairs:
            specials[ell] = tuple(pairs)
            rmax = max(rmax, ell)
    k_val = n
    for ell in range(1, n + 1):
        if ell == n or w[n - ell:] not in tables[ell]:
            k_val = ell
            break
    return specials, rmax + 1, k_val


def special_factor_report(w: str) -> SpecialFactorReport:
    w = parse_word(w)
    _require_nonempty(w)
    right, r, k = _special_side(w)
    rev_right, l, h = _special_side(w[::-1])
    left = {
        ell: tuple(sorted((u[::-1], v) for u, v in pairs))
        for ell, pairs in rev_right.items()
    }
    bis = []
    for ell, pairs in right.items():
        if ell in left:
            lefts = {u for u, _ in left[ell]}
            bis.extend(u for u, _ in pairs if u in lefts)
    return SpecialFactorReport(
        word=w, R=r, K=k, L=l, H=h,
        right_special=right, left_special=left,
        bispecial=tuple(sorted(bis, key=lambda u: (len(u), u))),
    )


def minimal_period(w: str) -> int:
    """Smallest p >= 1 with w[i] == w[i+p] wherever both sides exist.

    Computed as |w| minus the longest border length (prefix function).
    """
    w = parse_word(w)
    _require_nonempty(w)
    n = len(w)
    border = [0] * n
    k = 0
    for i in range(1, n):
        while k and w[i] != w[k]:
            k = border[k - 1]
        if w[i] == w[k]:
            k += 1
        border[i] = k
    return n - border[-1]


def shortest_unrepeated_suffix(w: str) -> str:
    """The shortest suffix of ``w`` occurring exactly once in ``w``."""
    w = parse_word(w)
    _require_nonempty(w)
    for ell in range(1, len(w) + 1):
        s = w[len(w) - ell:]
        if occurrence_count(s, w) == 1:
            return s
    raise AssertionError("unreachable: the full word occurs once")
