"""Counts of singular subspaces by dimension, and the shape of that count sequence.

delta(i) below is the number of totally singular subspaces of projective
dimension i in a rank-n polar space of order (s, t):

    delta(i) = prod_{u=0}^{i} (s^(n-u-1) t + 1) * prod_{u=0}^{i} (s^(n-u) - 1)
               / prod_{u=0}^{i} (s^(u+1) - 1)

The sequence delta(0), ..., delta(n-1) rises to a peak and then falls; the
peak index has a closed form, and the only possible tie is one flat step
right at the peak, occurring exactly when s == t and 2n == 1 (mod 3).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import IndexOutOfRange
from .exact import exact_div
from .params import PolarParams

UP = "up"
DOWN = "down"
FLAT = "flat"


def count_rank(p: PolarParams, i: int) -> int:
    """delta(i): number of singular subspaces of projective dimension i."""
    if not 0 <= i <= p.n - 1:
        raise IndexOutOfRange(f"i must be in 0..{p.n - 1}, got {i}")
    n, s, t = p.n, p.s, p.t
    num = 1
    den = 1
    for u in range(i + 1):
        num *= (s ** (n - u - 1) * t + 1) * (s ** (n - u) - 1)
        den *= s ** (u + 1) - 1
    return exact_div(num, den)


def count_ratio(p: PolarParams, i: int) -> Fraction:
    """delta(i+1) / delta(i) as an exact fraction, for 0 <= i <= n-2."""
    if not 0 <= i <= p.n - 2:
        raise IndexOutOfRange(f"i must be in 0..{p.n - 2}, got {i}")
    n, s, t = p.n, p.s, p.t
    return Fraction(
        (s ** (n - i - 2) * t + 1) * (s ** (n - i - 1) - 1),
        s ** (i + 2) - 1,
    )


def i_max(p: PolarParams) -> int:
    """Dimension at which delta peaks (the larger index of a flat step).

    With L = (2n - 2 + log_s t), the peak sits at floor(L/3) when t <= s and
    at ceil(L/3) - 1 when t > s.  Both branches are evaluated in integers
    via 6L = 4n - 4 + e.
    """
    six_l = 4 * p.n - 4 + p.e
    if p.e <= 2:
        return six_l // 6
    return -((-six_l) // 6) - 1


@dataclass(frozen=True)
class Profile:
    """The full count sequence with its step pattern and set of maximizers."""

    counts: tuple[int, ...]
    pattern: tuple[str, ...]
    argmax_set: frozenset[int]


def profile(p: PolarParams) -> Profile:
    """Compute delta(0..n-1), classify each step, and locate the maximum.

    Comparisons are exact integer comparisons of consecutive counts.
    """
    counts = tuple(count_rank(p, i) for i in range(p.n))
    pattern = []
    for a, b in zip(counts, counts[1:]):
        pattern.append(UP if b > a else DOWN if b < a else FLAT)
    peak = max(counts)
    argmax = frozenset(i for i, c in enumerate(counts) if c == peak)
    return Profile(counts=counts, pattern=tuple(pattern), argmax_set=argmax)
