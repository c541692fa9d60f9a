"""Parameter validation for finite polar spaces of rank n and order (s, ..., s, t).

A rank-n polar space with line order s has top order t with t*t == s**e for
a unique e in {0, 1, 2, 3, 4}.  Odd e forces s to be a perfect square, which
the t*t == s**e test enforces on its own.  s is not required to be a prime
power here; the classical examples all have prime-power s, but every counting
formula downstream is a polynomial identity in (s, t).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import BadLineOrder, BadTopOrder, RankTooSmall


@dataclass(frozen=True)
class PolarParams:
    """Validated (n, s, t) triple together with the exponent e, t*t == s**e."""

    n: int
    s: int
    t: int
    e: int


def validate_params(n: int, s: int, t: int) -> PolarParams:
    """Check rank and orders, derive e, and freeze the result.

    Raises RankTooSmall, BadLineOrder or BadTopOrder.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 3:
        raise RankTooSmall(f"rank n must be an integer >= 3, got {n!r}")
    if not isinstance(s, int) or isinstance(s, bool) or s < 2:
        raise BadLineOrder(f"line order s must be an integer >= 2, got {s!r}")
    if not isinstance(t, int) or isinstance(t, bool) or t < 1:
        raise BadTopOrder(f"top order t must be an integer >= 1, got {t!r}")
    for e in range(5):
        if t * t == s**e:
            return PolarParams(n=n, s=s, t=t, e=e)
    raise BadTopOrder(f"t*t == s**e has no solution with e in 0..4 for s={s}, t={t}")


def half_log(p: PolarParams) -> Fraction:
    """log_s(t) as the exact rational e/2."""
    return Fraction(p.e, 2)


def top_order_for(s: int, e: int) -> int:
    """The unique t >= 1 with t*t == s**e, or raise BadTopOrder.

    For odd e this needs s to be a perfect square.
    """
    if e % 2 == 0:
        return s ** (e // 2)
    r = math.isqrt(s)
    if r * r != s:
        raise BadTopOrder(f"odd e={e} needs a perfect-square line order, got s={s}")
    return r**e


def is_prime_power(m: int) -> bool:
    """True when m = p**k for a prime p; used only for advisory warnings."""
    if m < 2:
        return False
    for p in range(2, math.isqrt(m) + 1):
        if m % p == 0:
            while m % p == 0:
                m //= p
            return m == 1
    return True
