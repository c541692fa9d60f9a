"""Exact integer helpers used by the counting formulas.

All arithmetic in the package is exact: arbitrary-precision integers,
fractions for the half-integer exponent, never floats.
"""

from __future__ import annotations

from .errors import InexactDivision


def exact_div(a: int, b: int) -> int:
    """a // b, raising if b does not divide a."""
    q, r = divmod(a, b)
    if r:
        raise InexactDivision(f"{a} is not divisible by {b}")
    return q


def geometric_sum(s: int, k: int) -> int:
    """1 + s + ... + s**(k-1), the number of points of PG(k-1, s)."""
    return exact_div(s**k - 1, s - 1)


def gaussian_binomial(m: int, r: int, s: int) -> int:
    """Number of r-dimensional linear subspaces of an m-dimensional space over order s.

    Computed as a product of exact quotients; 0 when r is out of range.
    """
    if r < 0 or r > m:
        return 0
    num = 1
    den = 1
    for v in range(1, r + 1):
        num *= s ** (m - r + v) - 1
        den *= s**v - 1
    return exact_div(num, den)
