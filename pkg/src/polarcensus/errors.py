"""Exception types shared across the package.

Every error raised on bad input derives from PolarError, so callers
(and the CLI) can catch one base class and report the concrete name.
"""


class PolarError(Exception):
    pass


class RankTooSmall(PolarError):
    """Rank n < 3 is outside the supported range."""


class BadLineOrder(PolarError):
    """Line order s must be an integer >= 2."""


class BadTopOrder(PolarError):
    """Top order t must satisfy t*t == s**e for some e in 0..4."""


class IndexOutOfRange(PolarError):
    """Subspace dimension index i outside 0..n-1."""


class BadIntersectionDim(PolarError):
    """Intersection dimension k outside the admissible range for (n, i)."""


class BadPair(PolarError):
    """Pair (i, j) must satisfy 0 <= i < j <= n-1."""


class NoValidS(PolarError):
    """No admissible line order s for the requested column of a verdict table."""


class InexactDivision(PolarError):
    """A division that must be exact left a remainder."""


class UnsupportedField(PolarError):
    """Requested field size has no table-based implementation."""


class TooLarge(PolarError):
    """Predicted enumeration size exceeds the configured cap."""


class DimensionMismatch(PolarError):
    """Graph relations are defined between subspaces of equal dimension."""


class NotRegular(PolarError):
    """Sampled vertices of a degree-regular graph disagreed; enumeration bug."""
