"""Structural classification of palindromic richness for GT words.

A GT word is rich exactly when its heart v, with longest palindromic
prefix p and longest palindromic suffix q, satisfies one of:

- p and q are unseparated in v (they overlap, touch, or coincide);
- v = p x q for a single letter x, the alphabets of p and q intersect,
  and x occurs in p or q;
- v = p u q with disjoint alphabets of p and q, and u splits as
  u1 Z u2 where u1 uses only p's letters, u2 only q's letters, and Z
  only letters occurring nowhere else.

The classifier decides richness from these shape conditions alone; the
exhaustive verification battery checks it against palindrome counting.
The matchers below recognize the concrete letter patterns that rich
(and certain non-rich) hearts are forced into, and can rebuild the
word from the extracted parameters.
"""

from dataclasses import dataclass, field

from .errors import EmptyWordError, NotGTWordError, PreconditionError
from .palindromes import longest_palindromic_prefix, longest_palindromic_suffix
from .trapezoid import heart_decompose, is_gt_by_definition
from .words import parse_word

UNSEPARATED = "unseparated"
LETTER = "letter"
WORD = "word"


@dataclass(frozen=True)
class SeparationAnalysis:
    """How the longest palindromic prefix and suffix sit inside a word.

    kind is "unseparated" when |p| + |q| >= |v| (overlap, touch, or
    p = q = v), "letter" when exactly one letter lies between them, and
    "word" otherwise; separator holds that letter or word ("" when
    unseparated).
    """

    p: str
    q: str
    kind: str
    separator: str


def separation_analysis(v: str) -> SeparationAnalysis:
    v = parse_word(v)
    if not v:
        raise EmptyWordError("separation needs a non-empty word")
    p = longest_palindromic_prefix(v)
    q = longest_palindromic_suffix(v)
    gap = len(v) - len(p) - len(q)
    if gap <= 0:
        return SeparationAnalysis(p, q, UNSEPARATED, "")
    u = v[len(p):len(v) - len(q)]
    return SeparationAnalysis(p, q, LETTER if gap == 1 else WORD, u)


@dataclass(frozen=True)
class FormMatch:
    """A recognized structural form and its exact parameters."""

    form: str
    params: dict = field(compare=False)

    def __post_init__(self):
        object.__setattr__(self, "params", dict(self.params))


def _parse_power(s):
    """(letter, exponent) when s = c^e with e >= 1, else None."""
    if not s:
        return None
    c = s[0]
    if s.count(c) == len(s):
        return c, len(s)
    return None


def _parse_alternation(s):
    """(c, d, m) when s = (cd)^m c with c != d and m >= 1, else None."""
    if len(s) < 3 or len(s) % 2 == 0:
        return None
    c, d = s[0], s[1]
    if c == d:
        return None
    if s == (c + d) * (len(s) // 2) + c:
        return c, d, len(s) // 2
    return None


def _alt(c, d, m):
    return (c + d) * m + c


def _fresh_distinct(z, banned):
    letters = set(z)
    return len(letters) == len(z) and not (letters & banned)


# --- forms for hearts whose palindromic ends have disjoint alphabets ---


def _match_disjoint_direct(p, u, q):
    ap, aq = set(p), set(q)
    banned = ap | aq
    palt = _parse_alternation(p)
    qalt = _parse_alternation(q)
    ppow = _parse_power(p)
    qpow = _parse_power(q)

    if palt and qalt:
        a, b, m = palt
        y, x, n = qalt
        if u[-1] == x and _fresh_distinct(u[:-1], banned):
            return FormMatch("i", dict(a=a, b=b, x=x, y=y, m=m, n=n, Z=u[:-1]))
    if palt and qalt and len(u) >= 2:
        b, a, m = palt
        y, x, n = qalt
        if u[0] == a and u[-1] == x and _fresh_distinct(u[1:-1], banned):
            return FormMatch("ii", dict(a=a, b=b, x=x, y=y, m=m, n=n,
                                        Z=u[1:-1]))
    if ppow and ppow[1] >= 2 and qalt:
        a, e = ppow
        y, x, n = qalt
        if u[-1] == x and _fresh_distinct(u[:-1], banned):
            return FormMatch("iii", dict(a=a, x=x, y=y, m=e - 1, n=n,
                                         Z=u[:-1]))
    if palt and qpow and qpow[1] >= 2 and _fresh_distinct(u, banned):
        a, b, m = palt
        x, e = qpow
        return FormMatch("iv", dict(a=a, b=b, x=x, m=m, n=e - 1, Z=u))
    if palt and qalt and _fresh_distinct(u, banned):
        a, b, m = palt
        x, y, n = qalt
        return FormMatch("v", dict(a=a, b=b, x=x, y=y, m=m, n=n, Z=u))
    if ppow and qpow and _fresh_distinct(u, banned):
        a, m = ppow
        x, n = qpow
        return FormMatch("vi", dict(a=a, x=x, m=m, n=n, Z=u))
    return None


def _build_disjoint_direct(form, d):
    if form == "i":
        return _alt(d["a"], d["b"], d["m"]) + d["Z"] + d["x"] + \
            _alt(d["y"], d["x"], d["n"])
    if form == "ii":
        return _alt(d["b"], d["a"], d["m"]) + d["a"] + d["Z"] + d["x"] + \
            _alt(d["y"], d["x"], d["n"])
    if form == "iii":
        return d["a"] * (d["m"] + 1) + d["Z"] + d["x"] + \
            _alt(d["y"], d["x"], d["n"])
    if form == "iv":
        return _alt(d["a"], d["b"], d["m"]) + d["Z"] + d["x"] * (d["n"] + 1)
    if form == "v":
        return _alt(d["a"], d["b"], d["m"]) + d["Z"] + \
            _alt(d["x"], d["y"], d["n"])
    if form == "vi":
        return d["a"] * d["m"] + d["Z"] + d["x"] * d["n"]
    raise ValueError(f"unknown form {form!r}")


def match_rich_disjoint_form(v: str):
    """Recognize the rich shapes of a heart p·u·q with disjoint ends.

    Returns a FormMatch tagged "i".."vi" (or "vii" for a mirror match,
    carrying the inner tag) or None when no shape fits; for hearts of GT
    words a None here means the word is not rich. Raises
    PreconditionError when p and q are unseparated.
    """
    v = parse_word(v)
    sep = separation_analysis(v)
    if sep.kind == UNSEPARATED:
        raise PreconditionError("palindromic ends are not separated")
    p, q, u = sep.p, sep.q, sep.separator
    if set(p) & set(q):
        return None
    got = _match_disjoint_direct(p, u, q)
    if got:
        return got
    got = _match_disjoint_direct(q, u[::-1], p)
    if got:
        return FormMatch("vii", dict(inner=got.form, **got.params))
    return None


# --- nested alphabets, single-letter separator ---


def _parse_block_run(p, x, a):
    """(k, m, b) when p = [b (x a)^m x]^k b with m, k >= 1, else None."""
    if len(p) < 4:
        return None
    b = p[0]
    if b == x or b == a:
        return None
    i, m = 1, 0
    while i + 1 < len(p) and p[i] == x and p[i + 1] == a:
        m += 1
        i += 2
    if m < 1 or i >= len(p) or p[i] != x:
        return None
    block = p[:i + 1]
    k, rem = divmod(len(p) - 1, len(block))
    if rem or k < 1 or block * k + b != p:
        return None
    return k, m, b


def match_sep_by_x_form(v: str):
    """Recognize rich hearts p·x·q whose end alphabets are nested.

    The rich shape is p = [b (x a)^m x]^k b and q = (a x)^n a (the roles
    of p and q swap in the mirror case, reported with mirrored=True).
    Returns None when the alphabets are not nested or the shape does not
    fit; raises PreconditionError unless the separator is one letter.
    """
    v = parse_word(v)
    sep = separation_analysis(v)
    if sep.kind != LETTER:
        raise PreconditionError("needs a single-letter separator")
    p, q, x = sep.p, sep.q, sep.separator
    ap, aq = set(p), set(q)
    if not (ap <= aq or aq <= ap):
        return None
    for left, right, mirrored in ((p, q, False), (q, p, True)):
        qa = _parse_alternation(right)
        if qa is None or qa[1] != x:
            continue
        a, _, n = qa
        got = _parse_block_run(left, x, a)
        if got is None:
            continue
        k, m, b = got
        return FormMatch("sep-by-x",
                         dict(k=k, m=m, n=n, a=a, b=b, x=x,
                              mirrored=mirrored))
    return None


def build_sep_by_x_form(k, m, n, a, b, x, mirrored=False):
    block = b + (x + a) * m + x
    word = block * k + b + (x + a) * (n + 1)
    return word[::-1] if mirrored else word


# --- intersecting, incomparable alphabets, single-letter separator ---


def interleave_letter(w: str, x: str) -> str:
    """Insert x after every letter of w except after x itself."""
    return "".join(c if c == x else c + x for c in w)


def match_two_alternation_form(v: str):
    """Recognize hearts (a x)^n a · x · (b x)^m b, a/b/x mutually distinct.

    These are the hearts whose palindromic ends share a letter without
    either alphabet containing the other; all of them are rich. Returns
    None when the alphabets are not in that relation or the shape does
    not fit; raises PreconditionError unless the separator is one letter.
    """
    v = parse_word(v)
    sep = separation_analysis(v)
    if sep.kind != LETTER:
        raise PreconditionError("needs a single-letter separator")
    p, q, x = sep.p, sep.q, sep.separator
    ap, aq = set(p), set(q)
    if not (ap & aq) or ap <= aq or aq <= ap:
        return None
    pa = _parse_alternation(p)
    qa = _parse_alternation(q)
    if pa is None or qa is None:
        return None
    a, x1, n = pa
    b, x2, m = qa
    if x1 != x or x2 != x or a == b:
        return None
    return FormMatch("two-alternation", dict(a=a, b=b, x=x, n=n, m=m))


def build_two_alternation_form(n, m, a, b, x):
    return interleave_letter(a * (n + 1) + b * m, x) + b


# --- non-rich shapes for nested alphabets with a longer separator ---


def _match_type2(v):
    """(a, b, m, n, Z) when v = (ab)^{m+1} Z (ab)^{n-1} a, else None."""
    if len(v) < 6:
        return None
    a, b = v[0], v[1]
    if a == b:
        return None
    t, i = 0, 0
    while i + 1 < len(v) and v[i] == a and v[i + 1] == b:
        t += 1
        i += 2
    if t < 2:
        return None
    j = i
    while j < len(v) and v[j] != a and v[j] != b:
        j += 1
    z = v[i:j]
    if not z or len(set(z)) != len(z):
        return None
    rem = v[j:]
    r, jj = 0, 0
    while jj + 1 < len(rem) and rem[jj] == a and rem[jj + 1] == b:
        r += 1
        jj += 2
    if jj != len(rem) - 1 or rem[-1] != a:
        return None
    return dict(a=a, b=b, m=t - 1, n=r + 1, Z=z)


def match_nonrich_types(v: str):
    """Recognize the three non-rich heart shapes with nested ends.

    type-1: a Z1 a Z2 a with |Zi| >= 2, fresh distinct, disjoint.
    type-2: (ab)^{m+1} Z (ab)^{n-1} a with Z fresh distinct.
    type-3: the reverse of type-2 (parameters refer to the reversed word).
    Returns None when no shape fits.
    """
    v = parse_word(v)
    if not v:
        return None
    a = v[0]
    if v[-1] == a:
        pos = [i for i, c in enumerate(v) if c == a]
        if len(pos) == 3:
            z1, z2 = v[1:pos[1]], v[pos[1] + 1:-1]
            if (len(z1) >= 2 and len(z2) >= 2
                    and len(set(z1)) == len(z1) and len(set(z2)) == len(z2)
                    and not set(z1) & set(z2)):
                return FormMatch("type-1", dict(a=a, Z1=z1, Z2=z2))
    got = _match_type2(v)
    if got:
        return FormMatch("type-2", got)
    got = _match_type2(v[::-1])
    if got:
        return FormMatch("type-3", got)
    return None


def build_nonrich_type(form, d):
    if form == "type-1":
        return d["a"] + d["Z1"] + d["a"] + d["Z2"] + d["a"]
    if form == "type-2":
        base = (d["a"] + d["b"]) * (d["m"] + 1) + d["Z"] + \
            (d["a"] + d["b"]) * (d["n"] - 1) + d["a"]
        return base
    if form == "type-3":
        return build_nonrich_type("type-2", d)[::-1]
    raise ValueError(f"unknown form {form!r}")


def rebuild_form(match: FormMatch) -> str:
    """Reconstruct the word a matcher recognized; inverse of matching."""
    form, d = match.form, match.params
    if form in ("i", "ii", "iii", "iv", "v", "vi"):
        return _build_disjoint_direct(form, d)
    if form == "vii":
        return _build_disjoint_direct(d["inner"], d)[::-1]
    if form == "sep-by-x":
        return build_sep_by_x_form(d["k"], d["m"], d["n"], d["a"], d["b"],
                                   d["x"], d["mirrored"])
    if form == "two-alternation":
        return build_two_alternation_form(d["n"], d["m"], d["a"], d["b"],
                                          d["x"])
    if form in ("type-1", "type-2", "type-3"):
        return build_nonrich_type(form, d)
    raise ValueError(f"unknown form {form!r}")


# --- the classifier ---


def splittable_separator(u: str, ap, aq) -> bool:
    """Can u be cut into (p-letters)(fresh letters)(q-letters)?

    Greedy maximal prefix/suffix; any valid split's middle contains the
    greedy middle, so checking the greedy middle for freshness decides.
    """
    both = ap | aq
    i = 0
    while i < len(u) and u[i] in ap:
        i += 1
    j = len(u)
    while j > i and u[j - 1] in aq:
        j -= 1
    return all(c not in both for c in u[i:j])


@dataclass(frozen=True)
class RichGtClassification:
    """Richness verdict for a GT word, decided by heart shape alone."""

    word: str
    heart: str
    p: str
    q: str
    kind: str
    separator: str
    is_rich: bool
    condition: str
    reason: str
    form: object

    def to_dict(self):
        return {
            "word": self.word,
            "heart": self.heart,
            "p": self.p,
            "q": self.q,
            "kind": self.kind,
            "separator": self.separator,
            "is_rich": self.is_rich,
            "condition": self.condition,
            "reason": self.reason,
            "form": None if self.form is None else self.form.form,
            "params": None if self.form is None else self.form.params,
        }


def classify_rich_gt(w: str) -> RichGtClassification:
    """Decide richness of a GT word from its heart's separation shape.

    Never counts palindromes; the verdict comes from the structural
    conditions in the module docstring. Raises NotGTWordError when the
    input is not generalized trapezoidal.
    """
    w = parse_word(w)
    if not w:
        raise EmptyWordError("the empty word is not classified")
    if is_gt_by_definition(w) is None:
        raise NotGTWordError(f"{w!r} is not generalized trapezoidal")
    v = heart_decompose(w).heart
    sep = separation_analysis(v)
    p, q = sep.p, sep.q
    rich, condition, reason, form = False, None, None, None
    if sep.kind == UNSEPARATED:
        rich, condition = True, "unseparated"
    else:
        ap, aq = set(p), set(q)
        if ap & aq:
            if sep.kind == LETTER:
                x = sep.separator
                if x in ap or x in aq:
                    rich, condition = True, "letter-separated"
                    if ap <= aq or aq <= ap:
                        form = match_sep_by_x_form(v)
                    else:
                        form = match_two_alternation_form(v)
                else:
                    reason = "single-letter separator occurs in neither end"
            else:
                reason = "ends share letters but are separated by a word"
                form = match_nonrich_types(v)
        else:
            if splittable_separator(sep.separator, ap, aq):
                rich, condition = True, "disjoint-alphabets"
                form = match_rich_disjoint_form(v)
            else:
                reason = "separator does not split into end letters around fresh ones"
    return RichGtClassification(
        word=w, heart=v, p=p, q=q, kind=sep.kind, separator=sep.separator,
        is_rich=rich, condition=condition, reason=reason, form=form,
    )
