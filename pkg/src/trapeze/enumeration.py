"""Exhaustive enumeration, census tables, and a theorem verification battery.

The battery recomputes every quantity for every enumerated word along two
independent routes: an indexed one (suffix automaton, palindromic tree,
border array) and a definition-literal one (extension tables, slice scans).
A fixed registry of named invariants ties the routes together; a run
reports, per invariant, how many words violated it and the first
counterexample in enumeration order, so the output is deterministic for a
given range regardless of worker count.
"""

from dataclasses import dataclass
from itertools import product
from multiprocessing import get_context
import json

from .complexity import (
    _left_extension_tables,
    _right_extension_tables,
    minimal_period,
    profile_and_params,
)
from .errors import BoundsError
from .palindromes import _eertree
from .richgt import (
    LETTER,
    UNSEPARATED,
    WORD,
    classify_rich_gt,
    match_nonrich_types,
    match_rich_disjoint_form,
    match_sep_by_x_form,
    match_two_alternation_form,
    rebuild_form,
    splittable_separator,
)
from .trapezoid import heart_decompose, shape_from_profile
from .words import ALPHABET, parse_word

MAX_ALPHABET = 6
MAX_LENGTH = 16

_CHUNK_SIZE = 2000


@dataclass(frozen=True)
class EnumerationSpec:
    """Range of words to walk: lengths 1..max_length over k letters.

    With canonical=True (the default) only one representative per letter
    renaming class is produced: the word whose distinct letters first
    appear in the order a, b, c, ... Every property checked by the
    battery is invariant under renaming, so canonical mode loses nothing
    while shrinking the space considerably.
    """

    alphabet_size: int
    max_length: int
    canonical: bool = True

    def validate(self):
        if not 1 <= self.alphabet_size <= MAX_ALPHABET:
            raise BoundsError(
                f"alphabet_size must be in 1..{MAX_ALPHABET}, "
                f"got {self.alphabet_size}")
        if not 1 <= self.max_length <= MAX_LENGTH:
            raise BoundsError(
                f"max_length must be in 1..{MAX_LENGTH}, "
                f"got {self.max_length}")


def canonical_form(w: str) -> str:
    """Relabel so distinct letters first appear as a, b, c, ..."""
    w = parse_word(w)
    mapping = {}
    out = []
    for c in w:
        if c not in mapping:
            mapping[c] = ALPHABET[len(mapping)]
        out.append(mapping[c])
    return "".join(out)


def _canonical_of_length(letters, n):
    k = len(letters)
    buf = []

    def rec(used):
        if len(buf) == n:
            yield "".join(buf)
            return
        limit = used + 1 if used < k else k
        for i in range(limit):
            buf.append(letters[i])
            yield from rec(used + 1 if i == used else used)
            buf.pop()

    yield from rec(0)


def enumerate_words(spec: EnumerationSpec):
    """Yield the words of an enumeration range in shortlex order."""
    spec.validate()
    letters = ALPHABET[:spec.alphabet_size]
    for n in range(1, spec.max_length + 1):
        if spec.canonical:
            yield from _canonical_of_length(letters, n)
        else:
            for tup in product(letters, repeat=n):
                yield "".join(tup)


# --- the per-word measurement pass ---


def _brute_period(w):
    n = len(w)
    for p in range(1, n + 1):
        if all(w[i] == w[i + p] for i in range(n - p)):
            return p
    return n


def _analyze(w):
    """Measure one word along both routes; returns a plain dict.

    Keeping the result a dict gives tests a seam: a hook may corrupt
    selected entries before evaluation to prove the battery notices.
    """
    n = len(w)
    k = len(set(w))
    profile, big_r, big_k = profile_and_params(w)
    rw = w[::-1]
    rprofile, big_l, big_h = profile_and_params(rw)

    rext = _right_extension_tables(w)
    lext = _left_extension_tables(w)

    bprofile = [1]
    for ell in range(1, n):
        t = rext[ell]
        bprofile.append(len(t) + (0 if w[n - ell:] in t else 1))
    bprofile.append(1)

    b_r = 1
    b_l = 1
    for ell in range(1, n):
        if any(len(s) >= 2 for s in rext[ell].values()):
            b_r = ell + 1
        if any(len(s) >= 2 for s in lext[ell].values()):
            b_l = ell + 1
    b_k = n
    for ell in range(1, n):
        if w[n - ell:] not in rext[ell]:
            b_k = ell
            break
    b_h = n
    for ell in range(1, n):
        if w[:ell] not in lext[ell]:
            b_h = ell
            break

    hd = heart_decompose(w)
    v = hd.heart
    kv = len(set(v))
    if v == w:
        vprofile, r_v, k_v = profile, big_r, big_k
        l_v, h_v = big_l, big_h
    else:
        vprofile, r_v, k_v = profile_and_params(v)
        _, l_v, h_v = profile_and_params(v[::-1])

    shape = shape_from_profile(profile, k)
    rshape = shape_from_profile(rprofile, k)
    vshape = shape_from_profile(vprofile, kv)
    gt = shape is not None

    spans, lps, created = _eertree(w)
    rspans, rlps, rcreated = _eertree(rw)
    pal_set = {w[e - ln + 1:e + 1] for e, ln in spans}
    bpal = set()
    for i in range(n):
        for j in range(i + 1, n + 1):
            u = w[i:j]
            if u == u[::-1]:
                bpal.add(u)

    rich_count = len(spans) == n
    rich_ups = True
    for i, ln in enumerate(lps):
        q = w[i - ln + 1:i + 1]
        if w.find(q, 0, i) != -1:
            rich_ups = False
            break
    rich_ret = True
    for u in pal_set:
        pos = []
        f = w.find(u)
        while f != -1:
            pos.append(f)
            f = w.find(u, f + 1)
        for s, t in zip(pos, pos[1:]):
            r = w[s:t + len(u)]
            if r != r[::-1]:
                rich_ret = False
                break
        if not rich_ret:
            break

    if v == w:
        rich_heart = rich_count
    else:
        rich_heart = len(_eertree(v)[0]) == len(v)

    cls = None
    fm_disjoint = fm_sepx = fm_twoalt = fm_types = None
    if gt:
        cls = classify_rich_gt(w)
        ap, aq = set(cls.p), set(cls.q)
        if cls.kind != UNSEPARATED:
            if not ap & aq:
                fm_disjoint = match_rich_disjoint_form(v)
            elif cls.kind == LETTER and (ap <= aq or aq <= ap):
                fm_sepx = match_sep_by_x_form(v)
            elif cls.kind == LETTER:
                fm_twoalt = match_two_alternation_form(v)
            else:
                fm_types = match_nonrich_types(v)

    return {
        "w": w, "n": n, "k": k,
        "profile": profile, "rprofile": rprofile,
        "R": big_r, "K": big_k, "L": big_l, "H": big_h,
        "rext": rext, "lext": lext,
        "bprofile": bprofile,
        "bR": b_r, "bK": b_k, "bL": b_l, "bH": b_h,
        "period": minimal_period(w), "bperiod": _brute_period(w),
        "hd": hd, "v": v, "kv": kv,
        "Rv": r_v, "Kv": k_v, "Lv": l_v, "Hv": h_v,
        "shape": shape, "rshape": rshape, "vshape": vshape,
        "gt": gt,
        "rk": n == big_r + big_k + k - 2,
        "lh": n == big_l + big_h + k - 2,
        "gt_heart": n == r_v + k_v + k - 2,
        "gt_heart_lh": n == l_v + h_v + k - 2,
        "pal_set": pal_set, "bpal": bpal,
        "rich_count": rich_count, "rich_ups": rich_ups,
        "rich_returns": rich_ret,
        "rich_rev": len(rspans) == n,
        "all_created": all(created), "all_created_rev": all(rcreated),
        "lps_len": lps[-1], "lpp_len": rlps[-1],
        "rich_heart": rich_heart,
        "cls": cls,
        "fm_disjoint": fm_disjoint, "fm_sepx": fm_sepx,
        "fm_twoalt": fm_twoalt, "fm_types": fm_types,
    }


# --- the invariant registry ---

INVARIANTS = (
    ("profile-endpoints-and-bounds",
     "C(0)=1, C(n)=1, and C(i) never exceeds min(n-i+1, k^i)"),
    ("profile-matches-brute",
     "automaton profile equals the extension-table factor counts"),
    ("profile-step-valence-sum",
     "C(i+1) equals the sum of right valences over length-i factors"),
    ("params-match-brute",
     "automaton R, K, L, H equal their extension-table counterparts"),
    ("profile-shape-three-phases",
     "strict rise to min(R,K), no fall until max(R,K), then down by one"),
    ("length-at-least-rk-and-lh",
     "n >= R+K+k-2 and n >= L+H+k-2"),
    ("max-rk-equals-max-lh",
     "max(R,K) = max(L,H)"),
    ("profile-reversal-invariant",
     "the reversed word has the same complexity profile"),
    ("maximal-special-prefix-or-bispecial",
     "longest specials are affixes or bispecial; forced bispecial when "
     "R>H or L>K"),
    ("minimal-period-lower-bound",
     "period >= R+k-1 and >= n-K+1; equality in the first forces the "
     "RK-condition"),
    ("minimal-period-matches-brute",
     "border-array period equals the scanned period"),
    ("gt-characterizations-agree",
     "profile template, heart R+K test, and heart L+H test agree"),
    ("rk-condition-implies-gt",
     "words satisfying the RK- or LH-condition are GT"),
    ("rk-condition-iff-special-structure",
     "RK-condition iff one special per length below R, each of valence 2"),
    ("heart-preserves-gt-and-plateau",
     "w and its heart are GT together, with plateau (min,max) of "
     "(R_v,K_v)"),
    ("heart-min-max-symmetry",
     "under the heart R+K length test, {R_v,K_v} equals {L_v,H_v}"),
    ("gt-reversal-closed",
     "the reverse of a GT word is GT"),
    ("gt-factor-closed",
     "both maximal proper factors of a GT word are GT"),
    ("triangular-iff-balanced-heart",
     "profile peak is a point exactly when the heart has R_v = K_v"),
    ("heart-decomposition-sound",
     "affixes unioccurrent, heart maximal, lengths consistent, idempotent"),
    ("palindrome-count-bound",
     "at most n+1 distinct palindromic factors, empty word included"),
    ("palindromes-match-brute",
     "palindromic tree factors equal the brute slice scan"),
    ("richness-tests-agree",
     "count, unioccurrent-suffix, and complete-return tests agree"),
    ("richness-reversal-invariant",
     "a word and its reverse are rich together"),
    ("rich-prefixes-and-suffixes-rich",
     "in a rich word every prefix and suffix is rich"),
    ("binary-gt-rich",
     "GT words over two letters are rich"),
    ("binary-gt-ends-unseparated",
     "binary GT words: palindromic prefix and suffix cover the word"),
    ("classifier-agrees-with-count",
     "structural richness classifier matches the palindrome count"),
    ("shared-letters-incomparable-forces-single-letter",
     "separated ends sharing letters with incomparable alphabets force a "
     "single separating letter and a rich two-alternation heart"),
    ("nested-letter-separated-rule",
     "nested ends, one letter between: rich iff the letter lies in an "
     "end, and the block form then rebuilds the heart"),
    ("nested-word-separated-never-rich",
     "nested ends separated by a longer word are never rich and the "
     "separator uses an outside letter"),
    ("disjoint-split-iff-rich",
     "disjoint ends: rich iff the separator splits; a form then rebuilds "
     "the heart"),
    ("palindromic-heart-rich",
     "a GT word with a palindromic heart is rich"),
    ("ternary-new-letter-rich",
     "GT words over three letters with K = 1 are rich"),
    ("word-separated-shapes-match",
     "a recognized non-rich shape rebuilds the heart and excludes "
     "richness"),
    ("binary-gt-heart-form",
     "a binary GT word equals its heart or is x^j y or x y^j"),
    ("rich-iff-heart-rich",
     "a GT word and its heart are rich together"),
)

INVARIANT_IDS = tuple(i for i, _ in INVARIANTS)


def _gt_string(f):
    if not f:
        return True
    values, _, _ = profile_and_params(f)
    return shape_from_profile(values, len(set(f))) is not None


def _evaluate(a):
    """Return the ids of every invariant the analysis dict violates."""
    bad = []
    w, n, k = a["w"], a["n"], a["k"]
    C = a["profile"]
    v = a["v"]
    big_r, big_k, big_l, big_h = a["R"], a["K"], a["L"], a["H"]
    gt = a["gt"]
    rich = a["rich_count"]

    # profile-endpoints-and-bounds
    ok = C[0] == 1 and C[n] == 1 and len(C) == n + 1
    kp = 1
    for i in range(1, n + 1):
        kp = min(kp * k, n + 2)
        if not 1 <= C[i] <= min(n - i + 1, kp):
            ok = False
    if not ok:
        bad.append("profile-endpoints-and-bounds")

    # profile-matches-brute
    if C != a["bprofile"]:
        bad.append("profile-matches-brute")

    # profile-step-valence-sum
    ok = C[1] == k
    for ell in range(1, n):
        if C[ell + 1] != sum(len(s) for s in a["rext"][ell].values()):
            ok = False
            break
    if not ok:
        bad.append("profile-step-valence-sum")

    # params-match-brute
    if (big_r, big_k, big_l, big_h) != (a["bR"], a["bK"], a["bL"], a["bH"]):
        bad.append("params-match-brute")

    # profile-shape-three-phases
    # the first step rises by k-1, so strictness starts at 1 when k == 1
    lo, hi = min(big_r, big_k), max(big_r, big_k)
    ok = C[1] > C[0] if k >= 2 else C[1] == C[0]
    ok = ok and all(C[i] < C[i + 1] for i in range(1, lo))
    ok = ok and all(C[i] <= C[i + 1] for i in range(lo, hi))
    ok = ok and all(C[i + 1] == C[i] - 1 for i in range(hi, n))
    if big_r <= big_k:
        ok = ok and all(C[i + 1] == C[i] for i in range(big_r, big_k))
    if not ok:
        bad.append("profile-shape-three-phases")

    # length-at-least-rk-and-lh
    if n < big_r + big_k + k - 2 or n < big_l + big_h + k - 2:
        bad.append("length-at-least-rk-and-lh")

    # max-rk-equals-max-lh
    if max(big_r, big_k) != max(big_l, big_h):
        bad.append("max-rk-equals-max-lh")

    # profile-reversal-invariant
    if C != a["rprofile"]:
        bad.append("profile-reversal-invariant")

    # maximal-special-prefix-or-bispecial
    ok = True
    if a["bR"] >= 2:
        ell = a["bR"] - 1
        left_here = {u for u, s in a["lext"][ell].items() if len(s) >= 2}
        for u, s in a["rext"][ell].items():
            if len(s) < 2:
                continue
            bis = u in left_here
            if not (w.startswith(u) or bis):
                ok = False
            if a["bR"] > a["bH"] and not bis:
                ok = False
    if a["bL"] >= 2:
        ell = a["bL"] - 1
        right_here = {u for u, s in a["rext"][ell].items() if len(s) >= 2}
        for u, s in a["lext"][ell].items():
            if len(s) < 2:
                continue
            bis = u in right_here
            if not (w.endswith(u) or bis):
                ok = False
            if a["bL"] > a["bK"] and not bis:
                ok = False
    if not ok:
        bad.append("maximal-special-prefix-or-bispecial")

    # minimal-period-lower-bound
    p = a["period"]
    ok = p >= big_r + k - 1 and p >= n - big_k + 1
    if p == big_r + k - 1 and not a["rk"]:
        ok = False
    if not ok:
        bad.append("minimal-period-lower-bound")

    # minimal-period-matches-brute
    if a["period"] != a["bperiod"]:
        bad.append("minimal-period-matches-brute")

    # gt-characterizations-agree
    if not (gt == a["gt_heart"] == a["gt_heart_lh"]):
        bad.append("gt-characterizations-agree")

    # rk-condition-implies-gt
    if (a["rk"] or a["lh"]) and not gt:
        bad.append("rk-condition-implies-gt")

    # rk-condition-iff-special-structure
    if k >= 2:
        ok_r = True
        for ell in range(1, a["bR"]):
            vals = [len(s) for s in a["rext"][ell].values() if len(s) >= 2]
            if vals != [2]:
                ok_r = False
                break
        ok_l = True
        for ell in range(1, a["bL"]):
            vals = [len(s) for s in a["lext"][ell].values() if len(s) >= 2]
            if vals != [2]:
                ok_l = False
                break
        if a["rk"] != ok_r or a["lh"] != ok_l:
            bad.append("rk-condition-iff-special-structure")

    # heart-preserves-gt-and-plateau
    shape, vshape = a["shape"], a["vshape"]
    ok = gt == (vshape is not None)
    if gt and vshape is not None:
        lo_v = min(a["Rv"], a["Kv"])
        hi_v = max(a["Rv"], a["Kv"])
        ok = ok and (shape.m, shape.M) == (vshape.m, vshape.M) == (lo_v, hi_v)
    if not ok:
        bad.append("heart-preserves-gt-and-plateau")

    # heart-min-max-symmetry
    if a["gt_heart"]:
        pair = sorted((a["Rv"], a["Kv"]))
        dual = sorted((a["Lv"], a["Hv"]))
        if pair != dual or n != a["Lv"] + a["Hv"] + k - 2:
            bad.append("heart-min-max-symmetry")

    # gt-reversal-closed
    if gt != (a["rshape"] is not None):
        bad.append("gt-reversal-closed")

    # gt-factor-closed
    if gt and not (_gt_string(w[1:]) and _gt_string(w[:-1])):
        bad.append("gt-factor-closed")

    # triangular-iff-balanced-heart
    tri_shape = gt and shape.m == shape.M
    tri_heart = a["gt_heart"] and a["Rv"] == a["Kv"]
    if tri_shape != tri_heart:
        bad.append("triangular-iff-balanced-heart")

    # heart-decomposition-sound
    hd = a["hd"]
    ok = hd.prefix + v + hd.suffix == w and v != ""
    ok = ok and all(w.count(c) == 1 for c in hd.prefix + hd.suffix)
    if len(set(w)) == n:
        ok = ok and hd.prefix == "" and hd.suffix == "" and v == w
    else:
        ok = ok and w.count(v[0]) >= 2 and w.count(v[-1]) >= 2
    ok = ok and n - len(v) == k - a["kv"]
    ok = ok and heart_decompose(v).heart == v
    if not ok:
        bad.append("heart-decomposition-sound")

    # palindrome-count-bound
    if len(a["pal_set"]) > n:
        bad.append("palindrome-count-bound")

    # palindromes-match-brute
    if a["pal_set"] != a["bpal"]:
        bad.append("palindromes-match-brute")

    # richness-tests-agree
    if not (rich == a["rich_ups"] == a["rich_returns"]):
        bad.append("richness-tests-agree")

    # richness-reversal-invariant
    if rich != a["rich_rev"]:
        bad.append("richness-reversal-invariant")

    # rich-prefixes-and-suffixes-rich
    if rich and not (a["all_created"] and a["all_created_rev"]):
        bad.append("rich-prefixes-and-suffixes-rich")

    # binary-gt-rich
    if k == 2 and gt and not rich:
        bad.append("binary-gt-rich")

    # binary-gt-ends-unseparated
    if k == 2 and gt and a["lps_len"] + a["lpp_len"] < n:
        bad.append("binary-gt-ends-unseparated")

    cls = a["cls"]

    # classifier-agrees-with-count
    if gt and (cls is None or cls.is_rich != rich):
        bad.append("classifier-agrees-with-count")

    if cls is not None:
        ap, aq = set(cls.p), set(cls.q)
        shared = bool(ap & aq)
        comparable = ap <= aq or aq <= ap
        sep = cls.separator

        # shared-letters-incomparable-forces-single-letter
        if cls.kind != UNSEPARATED and shared and not comparable:
            fm = a["fm_twoalt"]
            if not (cls.kind == LETTER and rich and fm is not None
                    and rebuild_form(fm) == v):
                bad.append("shared-letters-incomparable-forces-single-letter")

        # nested-letter-separated-rule
        if cls.kind == LETTER and shared and comparable:
            ok = rich == (sep in ap or sep in aq)
            if rich:
                fm = a["fm_sepx"]
                ok = ok and fm is not None and rebuild_form(fm) == v
                if fm is not None:
                    d = fm.params
                    ok = ok and d["n"] >= d["m"]
                    if d["mirrored"]:
                        ok = ok and (a["Lv"], a["Hv"]) == (len(cls.q),
                                                           len(cls.p))
                    else:
                        ok = ok and (a["Rv"], a["Kv"]) == (len(cls.p),
                                                           len(cls.q))
            if not ok:
                bad.append("nested-letter-separated-rule")

        # nested-word-separated-never-rich
        if cls.kind == WORD and shared:
            if rich or not (set(sep) - (ap | aq)):
                bad.append("nested-word-separated-never-rich")

        # disjoint-split-iff-rich
        if cls.kind != UNSEPARATED and not shared:
            fm = a["fm_disjoint"]
            ok = (fm is not None) == rich
            ok = ok and splittable_separator(sep, ap, aq) == rich
            if fm is not None:
                ok = ok and rebuild_form(fm) == v
            if not ok:
                bad.append("disjoint-split-iff-rich")

        # word-separated-shapes-match
        if cls.kind == WORD and shared:
            fm = a["fm_types"]
            if fm is not None and not (not rich and rebuild_form(fm) == v):
                bad.append("word-separated-shapes-match")

    # palindromic-heart-rich
    if gt and v == v[::-1] and not rich:
        bad.append("palindromic-heart-rich")

    # ternary-new-letter-rich
    if gt and k == 3 and big_k == 1 and not rich:
        bad.append("ternary-new-letter-rich")

    # binary-gt-heart-form
    if k == 2 and gt and v != w:
        body, last = w[:-1], w[-1]
        head, first = w[1:], w[0]
        tail_form = len(set(body)) == 1 and last != body[0] and n >= 3
        head_form = len(set(head)) == 1 and first != head[0] and n >= 3
        if not (tail_form or head_form) or len(set(v)) != 1:
            bad.append("binary-gt-heart-form")

    # rich-iff-heart-rich
    if gt and rich != a["rich_heart"]:
        bad.append("rich-iff-heart-rich")

    return bad


# --- verification runs ---


@dataclass(frozen=True)
class InvariantResult:
    invariant_id: str
    description: str
    status: str
    failures: int
    counterexample: object

    def to_dict(self):
        return {
            "id": self.invariant_id,
            "description": self.description,
            "status": self.status,
            "failures": self.failures,
            "counterexample": self.counterexample,
        }


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one battery run over an enumeration range.

    failures counts violation events; a word breaking three invariants
    contributes three. Results keep the registry order."""

    alphabet_size: int
    max_length: int
    canonical: bool
    words: int
    failures: int
    results: tuple

    @property
    def ok(self):
        return self.failures == 0

    def to_dict(self):
        return {
            "alphabet_size": self.alphabet_size,
            "max_length": self.max_length,
            "canonical": self.canonical,
            "words": self.words,
            "failures": self.failures,
            "ok": self.ok,
            "results": [r.to_dict() for r in self.results],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)


def _chunked(it, size):
    buf = []
    for x in it:
        buf.append(x)
        if len(buf) >= size:
            yield buf
            buf = []
    if buf:
        yield buf


def _verify_chunk(words):
    counts = {}
    first = {}
    for w in words:
        for vid in _evaluate(_analyze(w)):
            counts[vid] = counts.get(vid, 0) + 1
            if vid not in first:
                first[vid] = w
    return len(words), counts, first


def verify_theorems(spec: EnumerationSpec, jobs: int = 1,
                    mutate=None) -> VerificationReport:
    """Run every invariant over every word of the enumeration range.

    mutate, when given, is called as mutate(word, analysis) before
    evaluation and may alter the analysis dict in place; it exists so
    tests can prove that a corrupted measurement is caught. Hooks are
    incompatible with multiprocessing, hence jobs must stay 1.
    """
    spec.validate()
    if mutate is not None and jobs > 1:
        raise ValueError("mutate hooks require jobs=1")
    counts = {}
    first = {}
    total = 0
    if jobs <= 1:
        for w in enumerate_words(spec):
            total += 1
            a = _analyze(w)
            if mutate is not None:
                mutate(w, a)
            for vid in _evaluate(a):
                counts[vid] = counts.get(vid, 0) + 1
                if vid not in first:
                    first[vid] = w
    else:
        ctx = get_context("fork")
        with ctx.Pool(processes=jobs) as pool:
            chunks = _chunked(enumerate_words(spec), _CHUNK_SIZE)
            for size, c_counts, c_first in pool.imap(_verify_chunk, chunks):
                total += size
                for vid, c in c_counts.items():
                    counts[vid] = counts.get(vid, 0) + c
                for vid, cw in c_first.items():
                    if vid not in first:
                        first[vid] = cw
    results = tuple(
        InvariantResult(
            invariant_id=vid,
            description=desc,
            status="fail" if counts.get(vid) else "pass",
            failures=counts.get(vid, 0),
            counterexample=first.get(vid),
        )
        for vid, desc in INVARIANTS)
    return VerificationReport(
        alphabet_size=spec.alphabet_size,
        max_length=spec.max_length,
        canonical=spec.canonical,
        words=total,
        failures=sum(counts.values()),
        results=results,
    )


# --- censuses ---


@dataclass(frozen=True)
class CensusRow:
    length: int
    total: int
    gt: int
    rich_gt: int
    triangular_gt: int
    rk_condition: int


def _census_word(w):
    n, k = len(w), len(set(w))
    values, big_r, big_k = profile_and_params(w)
    rk = n == big_r + big_k + k - 2
    shape = shape_from_profile(values, k)
    if shape is None:
        return False, False, False, rk
    spans, _, _ = _eertree(w)
    rich = len(spans) == n
    tri = k >= 2 and shape.m == shape.M
    return True, rich, tri, rk


def _census_chunk(words):
    acc = {}
    for w in words:
        gt, rich, tri, rk = _census_word(w)
        row = acc.setdefault(len(w), [0, 0, 0, 0, 0])
        row[0] += 1
        row[1] += gt
        row[2] += gt and rich
        row[3] += tri
        row[4] += rk
    return acc


def census(spec: EnumerationSpec, jobs: int = 1):
    """Per-length counts of GT, rich GT, triangular, and RK words.

    One-letter words never count as triangular: the peak comparison
    needs at least two letters to be meaningful."""
    spec.validate()
    acc = {}

    def merge(part):
        for ell, row in part.items():
            mine = acc.setdefault(ell, [0, 0, 0, 0, 0])
            for i, x in enumerate(row):
                mine[i] += x

    if jobs <= 1:
        merge(_census_chunk(enumerate_words(spec)))
    else:
        ctx = get_context("fork")
        with ctx.Pool(processes=jobs) as pool:
            chunks = _chunked(enumerate_words(spec), _CHUNK_SIZE)
            for part in pool.imap(_census_chunk, chunks):
                merge(part)
    return [CensusRow(ell, *acc[ell]) for ell in sorted(acc)]


def census_csv(rows) -> str:
    lines = ["length,total,gt,rich_gt,triangular_gt,rk_condition"]
    for r in rows:
        lines.append(f"{r.length},{r.total},{r.gt},{r.rich_gt},"
                     f"{r.triangular_gt},{r.rk_condition}")
    return "\n".join(lines) + "\n"
