"""Exception types shared across the package."""


class TrapezeError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(TrapezeError):
    """Input contains characters outside the supported alphabet a-z."""


class EmptyWordError(TrapezeError):
    """Operation needs a non-empty word."""


class EmptyPatternError(TrapezeError):
    """Occurrence counting needs a non-empty pattern."""


class NotAFactorError(TrapezeError):
    """The given pattern does not occur in the word."""


class NotGTWordError(TrapezeError):
    """Operation is only defined for generalized trapezoidal words."""


class AlphabetTooSmallError(TrapezeError):
    """Operation needs at least two distinct letters."""


class PreconditionError(TrapezeError):
    """Structural matcher called on input without the required separation."""


class BoundsError(TrapezeError):
    """Enumeration bounds outside the supported range."""
