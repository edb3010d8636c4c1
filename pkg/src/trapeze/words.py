"""Core word operations: validation, factors, occurrences, reversal.

Words are plain Python strings over the lowercase letters a-z. Everything
here is a direct, definition-level computation; the indexed structures in
other modules are cross-checked against these in the test suite.
"""

from .errors import EmptyPatternError, NotAFactorError, ParseError

ALPHABET = "abcdefghijklmnopqrstuvwxyz"

_VALID = frozenset(ALPHABET)


def parse_word(text: str) -> str:
    """Validate that ``text`` is a word over a-z and return it.

    Raises ParseError for anything else (uppercase, digits, whitespace...).
    The empty string is a valid word.
    """
    if not isinstance(text, str):
        raise ParseError(f"expected a string, got {type(text).__name__}")
    bad = set(text) - _VALID
    if bad:
        raise ParseError(
            "word may only contain lowercase a-z, found "
            + ", ".join(repr(c) for c in sorted(bad))
        )
    return text


def alphabet(w: str) -> frozenset:
    """Set of distinct letters occurring in ``w``."""
    return frozenset(w)


def alphabet_size(w: str) -> int:
    return len(set(w))


def factors_of_length(w: str, n: int) -> set:
    """All distinct factors of ``w`` of length ``n``.

    Length 0 gives {""}; lengths beyond |w| give the empty set.
    """
    if n < 0:
        raise ValueError("factor length must be >= 0")
    if n == 0:
        return {""}
    return {w[i:i + n] for i in range(len(w) - n + 1)}


def all_factors(w: str) -> set:
    """Every distinct factor of ``w``, including the empty word."""
    out = {""}
    for i in range(len(w)):
        for j in range(i + 1, len(w) + 1):
            out.add(w[i:j])
    return out


def occurrence_positions(u: str, w: str) -> list:
    """Start positions of every (possibly overlapping) occurrence of u in w."""
    if not u:
        raise EmptyPatternError("occurrences of the empty word are not counted")
    pos = []
    i = w.find(u)
    while i != -1:
        pos.append(i)
        i = w.find(u, i + 1)
    return pos


def occurrence_count(u: str, w: str) -> int:
    """Number of occurrences of u in w, overlaps included."""
    return len(occurrence_positions(u, w))


def is_factor(u: str, w: str) -> bool:
    return u in w


def require_factor(u: str, w: str) -> None:
    if not u:
        raise EmptyPatternError("pattern must be non-empty")
    if u not in w:
        raise NotAFactorError(f"{u!r} does not occur in {w!r}")


def reverse(w: str) -> str:
    """The mirror image of ``w``."""
    return w[::-1]


def is_palindrome(w: str) -> bool:
    return w == w[::-1]
