"""Generalized trapezoidal word analysis.

Factor complexity profiles, the four special-factor parameters, heart
decomposition, trapezoid characterizations, palindromic richness, a
structural richness classifier with exact form matchers, exhaustive
censuses, and a cross-checking theorem verification battery.
"""

__version__ = "0.1.0"

from .errors import (
    AlphabetTooSmallError,
    BoundsError,
    EmptyPatternError,
    EmptyWordError,
    NotAFactorError,
    NotGTWordError,
    ParseError,
    PreconditionError,
    TrapezeError,
)
from .words import (
    ALPHABET,
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
from .complexity import (
    ComplexityProfile,
    SpecialFactorReport,
    WordParameters,
    complexity_profile,
    left_valence,
    minimal_period,
    right_valence,
    shortest_unrepeated_suffix,
    special_factor_report,
    word_parameters,
)
from .trapezoid import (
    HeartDecomposition,
    TrapezoidShape,
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
)
from .palindromes import (
    PalindromeIndex,
    complete_returns,
    is_rich_by_count,
    is_rich_by_returns,
    is_rich_by_ups,
    longest_palindromic_prefix,
    longest_palindromic_suffix,
    palindrome_index,
    palindromic_factors,
)
from .richgt import (
    LETTER,
    UNSEPARATED,
    WORD,
    FormMatch,
    RichGtClassification,
    SeparationAnalysis,
    build_nonrich_type,
    build_sep_by_x_form,
    build_two_alternation_form,
    classify_rich_gt,
    interleave_letter,
    match_nonrich_types,
    match_rich_disjoint_form,
    match_sep_by_x_form,
    match_two_alternation_form,
    rebuild_form,
    separation_analysis,
    splittable_separator,
)
from .enumeration import (
    INVARIANTS,
    CensusRow,
    EnumerationSpec,
    InvariantResult,
    VerificationReport,
    canonical_form,
    census,
    census_csv,
    enumerate_words,
    verify_theorems,
)
from .analysis import AnalysisRecord, analyze, render_table
