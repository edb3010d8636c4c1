"""One-stop per-word analysis joining every measurement in the library."""

from dataclasses import dataclass

from .complexity import minimal_period, profile_and_params, word_parameters
from .errors import AlphabetTooSmallError, EmptyWordError
from .palindromes import is_rich_by_count
from .richgt import classify_rich_gt
from .trapezoid import heart_decompose, is_triangular, shape_from_profile
from .words import parse_word


@dataclass(frozen=True)
class AnalysisRecord:
    """Everything the library can say about one word."""

    word: str
    length: int
    alphabet_size: int
    profile: tuple
    R: int
    K: int
    L: int
    H: int
    minimal_period: int
    heart_prefix: str
    heart: str
    heart_suffix: str
    heart_R: int
    heart_K: int
    heart_L: int
    heart_H: int
    is_gt: bool
    m: object
    M: object
    is_triangular: object
    rk_condition: bool
    lh_condition: bool
    is_rich: bool
    classification: object

    def to_dict(self):
        return {
            "word": self.word,
            "length": self.length,
            "alphabet_size": self.alphabet_size,
            "profile": list(self.profile),
            "R": self.R,
            "K": self.K,
            "L": self.L,
            "H": self.H,
            "minimal_period": self.minimal_period,
            "heart_prefix": self.heart_prefix,
            "heart": self.heart,
            "heart_suffix": self.heart_suffix,
            "heart_R": self.heart_R,
            "heart_K": self.heart_K,
            "heart_L": self.heart_L,
            "heart_H": self.heart_H,
            "is_gt": self.is_gt,
            "m": self.m,
            "M": self.M,
            "is_triangular": self.is_triangular,
            "rk_condition": self.rk_condition,
            "lh_condition": self.lh_condition,
            "is_rich": self.is_rich,
            "classification": self.classification,
        }


def analyze(word: str) -> AnalysisRecord:
    """Full analysis of a non-empty word."""
    w = parse_word(word)
    if not w:
        raise EmptyWordError("nothing to analyze in the empty word")
    n = len(w)
    k = len(set(w))
    values, big_r, big_k = profile_and_params(w)
    _, big_l, big_h = profile_and_params(w[::-1])
    hd = heart_decompose(w)
    hp = word_parameters(hd.heart)
    shape = shape_from_profile(values, k)
    try:
        tri = is_triangular(w)
    except AlphabetTooSmallError:
        tri = None
    gt = shape is not None
    return AnalysisRecord(
        word=w,
        length=n,
        alphabet_size=k,
        profile=tuple(values),
        R=big_r,
        K=big_k,
        L=big_l,
        H=big_h,
        minimal_period=minimal_period(w),
        heart_prefix=hd.prefix,
        heart=hd.heart,
        heart_suffix=hd.suffix,
        heart_R=hp.R,
        heart_K=hp.K,
        heart_L=hp.L,
        heart_H=hp.H,
        is_gt=gt,
        m=shape.m if gt else None,
        M=shape.M if gt else None,
        is_triangular=tri,
        rk_condition=n == big_r + big_k + k - 2,
        lh_condition=n == big_l + big_h + k - 2,
        is_rich=is_rich_by_count(w),
        classification=classify_rich_gt(w).to_dict() if gt else None,
    )


def _yn(b):
    return "yes" if b else "no"


def render_table(rec: AnalysisRecord) -> str:
    """Readable multi-line summary of one record."""
    lines = [
        f"word            {rec.word}",
        f"length          {rec.length}",
        f"alphabet size   {rec.alphabet_size}",
        "profile         " + " ".join(str(c) for c in rec.profile),
        f"R K L H         {rec.R} {rec.K} {rec.L} {rec.H}",
        f"minimal period  {rec.minimal_period}",
        f"heart           {rec.heart}"
        + (f"  (prefix {rec.heart_prefix!r}, suffix {rec.heart_suffix!r})"
           if rec.heart != rec.word else ""),
        f"heart R K L H   {rec.heart_R} {rec.heart_K} "
        f"{rec.heart_L} {rec.heart_H}",
    ]
    if rec.is_gt:
        lines.append(f"GT              yes  (m={rec.m}, M={rec.M})")
    else:
        lines.append("GT              no")
    tri = "n/a" if rec.is_triangular is None else _yn(rec.is_triangular)
    lines.append(f"triangular      {tri}")
    lines.append(f"RK-condition    {_yn(rec.rk_condition)}")
    lines.append(f"LH-condition    {_yn(rec.lh_condition)}")
    lines.append(f"rich            {_yn(rec.is_rich)}")
    c = rec.classification
    if c is not None:
        verdict = c["condition"] if c["is_rich"] else c["reason"]
        lines.append(f"richness via    {verdict}")
        lines.append(f"heart ends      p={c['p']!r} q={c['q']!r} "
                     f"{c['kind']}" +
                     (f" by {c['separator']!r}" if c["separator"] else ""))
        if c["form"] is not None:
            parts = " ".join(f"{key}={val!r}"
                             for key, val in sorted(c["params"].items()))
            lines.append(f"matched form    {c['form']}  {parts}")
    return "\n".join(lines)
