"""Palindromic factors, richness tests, complete returns.

The index is built with a palindromic tree: one pass over the word,
one node per distinct palindromic factor. A word of length n has at
most n + 1 distinct palindromic factors (empty word included); words
reaching that bound are called rich here. Three independent richness
tests are provided:

- count: the number of distinct palindromic factors equals |w| + 1;
- ups: every prefix has a unioccurrent palindromic suffix, tested via
  the longest palindromic suffix of each prefix;
- returns: every complete return to a palindromic factor is itself a
  palindrome.
"""

from dataclasses import dataclass

from .errors import EmptyWordError
from .words import occurrence_positions, parse_word, require_factor


def _eertree(w):
    """One pass palindromic tree build.

    Returns (spans, lps, created): spans holds (end_index, length) for
    each distinct non-empty palindromic factor in discovery order;
    lps[i] is the length of the longest palindromic suffix of w[:i+1];
    created[i] says whether that suffix occurred for the first time.
    """
    length = [-1, 0]
    link = [0, 0]
    nxt = [{}, {}]
    spans = []
    lps = []
    created = []
    last = 1
    for i, c in enumerate(w):
        t = last
        while True:
            j = i - length[t] - 1
            if j >= 0 and w[j] == c:
                break
            t = link[t]
        got = nxt[t].get(c)
        if got is None:
            cur = len(length)
            newlen = length[t] + 2
            if newlen == 1:
                cur_link = 1
            else:
                t2 = link[t]
                while True:
                    j = i - length[t2] - 1
                    if j >= 0 and w[j] == c:
                        break
                    t2 = link[t2]
                cur_link = nxt[t2][c]
            length.append(newlen)
            link.append(cur_link)
            nxt.append({})
            nxt[t][c] = cur
            spans.append((i, newlen))
            last = cur
            created.append(True)
        else:
            last = got
            created.append(False)
        lps.append(length[last])
    return spans, lps, created


@dataclass(frozen=True)
class PalindromeIndex:
    """Distinct palindromic factors plus per-prefix suffix data.

    prefix_suffixes[i] describes the prefix of length i + 1: its longest
    palindromic suffix and whether that suffix occurs exactly once in
    the prefix.
    """

    word: str
    palindromes: frozenset
    counts_by_length: tuple
    prefix_suffixes: tuple

    @property
    def count(self):
        return len(self.palindromes)


def palindrome_index(w: str) -> PalindromeIndex:
    w = parse_word(w)
    spans, lps, _ = _eertree(w)
    pals = {""}
    counts = [0] * (len(w) + 1)
    counts[0] = 1
    for end, ln in spans:
        pals.add(w[end - ln + 1:end + 1])
        counts[ln] += 1
    entries = []
    for i, ln in enumerate(lps):
        q = w[i - ln + 1:i + 1]
        entries.append((q, w.find(q, 0, i) == -1))
    return PalindromeIndex(
        word=w,
        palindromes=frozenset(pals),
        counts_by_length=tuple(counts),
        prefix_suffixes=tuple(entries),
    )


def palindromic_factors(w: str) -> frozenset:
    """All distinct palindromic factors, the empty word included."""
    return palindrome_index(w).palindromes


def is_rich_by_count(w: str) -> bool:
    """Rich iff the palindromic factor count reaches |w| + 1."""
    w = parse_word(w)
    spans, _, _ = _eertree(w)
    return len(spans) == len(w)


def is_rich_by_ups(w: str) -> bool:
    """Rich iff every prefix has a unioccurrent palindromic suffix.

    The longest palindromic suffix of a prefix is its only candidate:
    any shorter palindromic suffix recurs inside it (as a border), so
    the test checks exactly that suffix for a second occurrence.
    """
    w = parse_word(w)
    _, lps, _ = _eertree(w)
    for i, ln in enumerate(lps):
        q = w[i - ln + 1:i + 1]
        if w.find(q, 0, i) != -1:
            return False
    return True


def complete_returns(w: str, u: str) -> list:
    """Factors of w spanning consecutive occurrences of u.

    A complete return starts and ends with an occurrence of u and
    contains exactly those two occurrences.
    """
    w = parse_word(w)
    require_factor(u, w)
    pos = occurrence_positions(u, w)
    return [w[a:b + len(u)] for a, b in zip(pos, pos[1:])]


def is_rich_by_returns(w: str) -> bool:
    """Rich iff complete returns to palindromic factors are palindromes."""
    w = parse_word(w)
    spans, _, _ = _eertree(w)
    pals = {w[end - ln + 1:end + 1] for end, ln in spans}
    for u in pals:
        pos = occurrence_positions(u, w)
        for a, b in zip(pos, pos[1:]):
            r = w[a:b + len(u)]
            if r != r[::-1]:
                return False
    return True


def longest_palindromic_prefix(w: str) -> str:
    w = parse_word(w)
    if not w:
        raise EmptyWordError("needs a non-empty word")
    for j in range(len(w), 0, -1):
        u = w[:j]
        if u == u[::-1]:
            return u
    raise AssertionError("unreachable: a single letter is a palindrome")


def longest_palindromic_suffix(w: str) -> str:
    w = parse_word(w)
    if not w:
        raise EmptyWordError("needs a non-empty word")
    for i in range(len(w)):
        u = w[i:]
        if u == u[::-1]:
            return u
    raise AssertionError("unreachable: a single letter is a palindrome")
