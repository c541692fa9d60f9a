"""Exact polynomial arithmetic in q, with s = q**2 and t = q**e.

The counts and degrees of this package are polynomials in (s, t) with the
constraint t*t == s**e.  Substituting s = q**2, t = q**e turns every one of
them into an integer polynomial in the single variable q, for all five
admissible e at once.  This module rebuilds the count and degree formulas
in that variable so identities can be checked coefficient-for-coefficient
and sign claims can be certified beyond an explicit root bound.

Evaluation contract: a polynomial built for (n, e) evaluated at an integer
q equals the numeric value at s = q**2, t = q**e.  Perfect-square s only;
non-square s stays on the integer code path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IndexOutOfRange, InexactDivision
from .degrees import GraphKind


class QPolynomial:
    """Integer-coefficient polynomial in q, stored as {exponent: coefficient}.

    Instances are treated as immutable values; all arithmetic returns new
    objects.  Division is exact division, raising InexactDivision on any
    remainder.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v != 0}

    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls()

    @classmethod
    def const(cls, c: int) -> "QPolynomial":
        return cls({0: c})

    @classmethod
    def monomial(cls, c: int, k: int) -> "QPolynomial":
        if k < 0:
            raise ValueError(f"negative exponent {k}")
        return cls({k: c})

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return max(self.coeffs) if self.coeffs else -1

    def leading(self) -> int:
        return self.coeffs[max(self.coeffs)] if self.coeffs else 0

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return QPolynomial(out)

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) - v
        return QPolynomial(out)

    def __neg__(self) -> "QPolynomial":
        return QPolynomial({k: -v for k, v in self.coeffs.items()})

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":
        out: dict[int, int] = {}
        for ka, va in self.coeffs.items():
            for kb, vb in other.coeffs.items():
                k = ka + kb
                out[k] = out.get(k, 0) + va * vb
        return QPolynomial(out)

    def divmod(self, other: "QPolynomial") -> tuple["QPolynomial", "QPolynomial"]:
        """Long division; requires the divisor leading coefficient to be +-1."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead = other.leading()
        if lead not in (1, -1):
            raise InexactDivision(f"divisor leading coefficient {lead} is not a unit")
        d = other.degree()
        rem = dict(self.coeffs)
        quo: dict[int, int] = {}
        while rem:
            k = max(rem)
            if k < d:
                break
            c = rem[k] * lead  # lead in {1,-1} so this is division by lead
            quo[k - d] = c
            for kb, vb in other.coeffs.items():
                kk = k - d + kb
                nv = rem.get(kk, 0) - c * vb
                if nv:
                    rem[kk] = nv
                else:
                    rem.pop(kk, None)
        return QPolynomial(quo), QPolynomial(rem)

    __divmod__ = divmod

    def div_exact(self, other: "QPolynomial") -> "QPolynomial":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise InexactDivision(f"({self}) is not divisible by ({other})")
        return q

    def __call__(self, q: int) -> int:
        """Evaluate at an integer point, exactly."""
        return sum(c * q**k for k, c in self.coeffs.items())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __str__(self) -> str:
        """Canonical descending-exponent rendering, e.g. 'q^4 - 2*q^2 + 7'."""
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs, reverse=True):
            c = self.coeffs[k]
            if k == 0:
                body = str(abs(c))
            else:
                var = "q" if k == 1 else f"q^{k}"
                body = var if abs(c) == 1 else f"{abs(c)}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"QPolynomial({self})"


ONE = QPolynomial.const(1)


def _sp(a: int, e: int = 0, sign: int = 1) -> QPolynomial:
    """The building-block factor q^(2a + e) + sign (s = q^2, t = q^e)."""
    d = 2 * a + e
    if d == 0:  # exponent key would collide with the constant key
        return QPolynomial.const(1 + sign)
    return QPolynomial({d: 1, 0: sign})


def _s_power(a: int, e: int = 0) -> QPolynomial:
    """Monomial s^a * (t if e else 1) = q^(2a + e)."""
    return QPolynomial({2 * a + e: 1})


def _gauss_poly(m: int, r: int) -> QPolynomial:
    """Gaussian binomial [m, r] with base s = q^2, as an exact polynomial."""
    if r < 0 or r > m:
        return QPolynomial.zero()
    num = ONE
    den = ONE
    for v in range(1, r + 1):
        num = num * _sp(m - r + v, sign=-1)
        den = den * _sp(v, sign=-1)
    return num.div_exact(den)


def _check(n: int, e: int, i: int) -> None:
    if not 0 <= e <= 4:
        raise IndexOutOfRange(f"e must be in 0..4, got {e}")
    if not 0 <= i <= n - 1:
        raise IndexOutOfRange(f"i must be in 0..{n - 1}, got {i}")


def poly_count(n: int, e: int, i: int) -> QPolynomial:
    """Number of singular i-spaces as a polynomial in q."""
    _check(n, e, i)
    num = ONE
    den = ONE
    for u in range(i + 1):
        num = num * _sp(n - u - 1, e) * _sp(n - u, sign=-1)
        den = den * _sp(u + 1, sign=-1)
    return num.div_exact(den)


def poly_kappa_component(n: int, e: int, i: int, k: int) -> QPolynomial:
    """Collinear pairs with meet dimension k, as a polynomial in q."""
    _check(n, e, i)
    lo = max(2 * i - n + 1, -1)
    if not lo <= k <= i - 1:
        raise IndexOutOfRange(f"k must be in {lo}..{i - 1}, got {k}")
    f = ONE
    for u in range(n - 2 * i + k - 1, n - i - 1):
        f = f * _sp(u, e)
    g = _s_power((i - k) ** 2) * _gauss_poly(i + 1, k + 1) * _gauss_poly(n - i - 1, i - k)
    return f * g


def poly_lambda(n: int, e: int, i: int) -> QPolynomial:
    """Hyperplane-meeting non-collinear pairs, as a polynomial in q."""
    _check(n, e, i)
    geom = _sp(i + 1, sign=-1).div_exact(_sp(1, sign=-1))
    return _s_power(2 * n - 2 * i - 2, e) * geom


def _poly_kappa(n: int, e: int, i: int) -> QPolynomial:
    out = QPolynomial.zero()
    for k in range(max(2 * i - n + 1, -1), i):
        out = out + poly_kappa_component(n, e, i, k)
    return out


def _poly_xi(n: int, e: int, i: int) -> QPolynomial:
    if 2 * i < n - 2 or i == n - 1:
        return QPolynomial.zero()
    num = _s_power((n - i - 1) ** 2)
    for u in range(n - i - 1):
        num = num * _sp(u, e)
    for u in range(n - i, i + 2):
        num = num * _sp(u, sign=-1)
    den = ONE
    for u in range(1, 2 * i - n + 3):
        den = den * _sp(u, sign=-1)
    return num.div_exact(den)


def _poly_mu(n: int, e: int, i: int) -> QPolynomial:
    a = _sp(i + 1, sign=-1).div_exact(_sp(1, sign=-1))
    b = (_sp(n - i - 1, e) * _sp(n - i, sign=-1)).div_exact(_sp(1, sign=-1))
    return a * (b - ONE)


def _poly_nu(n: int, e: int, i: int) -> QPolynomial:
    if i == n - 1:
        return QPolynomial.zero()
    a = _sp(i + 1, sign=-1).div_exact(_sp(1, sign=-1))
    c = (_s_power(1) * _sp(n - i - 2, e) * _sp(n - i - 1, sign=-1)).div_exact(
        _sp(1, sign=-1)
    )
    return a * c


def poly_degree(n: int, e: int, i: int, kind: GraphKind) -> QPolynomial:
    """Graph degree as a polynomial in q; mirrors the integer formulas."""
    _check(n, e, i)
    if kind is GraphKind.COLLINEARITY:
        return _poly_kappa(n, e, i)
    if kind is GraphKind.UNION:
        return _poly_kappa(n, e, i) + poly_lambda(n, e, i)
    if kind is GraphKind.PERP_MAX:
        return _poly_xi(n, e, i)
    if kind is GraphKind.HYPERPLANE_MEET:
        return _poly_mu(n, e, i)
    if kind is GraphKind.INTERSECTION:
        return _poly_nu(n, e, i)
    raise ValueError(f"unknown graph kind {kind!r}")


def poly_equal(a: QPolynomial, b: QPolynomial) -> bool:
    """Coefficient-wise equality."""
    return a == b


POSITIVE_FOR = "positive-for"
NEGATIVE_FOR = "negative-for"
IDENTICALLY_ZERO = "identically-zero"
MIXED = "mixed"  # reserved; never produced for nonzero input

_SMALL_CHECK_LIMIT = 10_000


@dataclass(frozen=True)
class SignVerdict:
    """Certified eventual sign of a polynomial at integer arguments.

    tag positive-for/negative-for comes with q0 such that the sign holds for
    every integer q >= q0 (root bound certificate).  holds_from_2 reports
    whether the same sign was also observed at every q in 2..q0-1; None when
    that range was too large to sweep.
    """

    tag: str
    q0: int | None = None
    holds_from_2: bool | None = None


def eventual_sign(a: QPolynomial) -> SignVerdict:
    """Sign of a(q) for all large integer q, certified by a Cauchy root bound.

    Every real root of a has absolute value < 1 + max|c_i| / |c_d| with c_d
    the leading coefficient, so beyond q0 = 1 + ceil(max|c_i| / |c_d|) the
    polynomial cannot change sign and agrees with its leading coefficient.
    """
    if a.is_zero():
        return SignVerdict(tag=IDENTICALLY_ZERO)
    d = a.degree()
    lead = a.coeffs[d]
    lower = [abs(c) for k, c in a.coeffs.items() if k != d]
    if lower:
        m = max(lower)
        q0 = 1 + -(-m // abs(lead))
    else:
        q0 = 2
    q0 = max(q0, 2)
    tag = POSITIVE_FOR if lead > 0 else NEGATIVE_FOR
    want = 1 if lead > 0 else -1
    if q0 - 2 > _SMALL_CHECK_LIMIT:
        holds = None
    else:
        holds = True
        for q in range(2, q0):
            v = a(q)
            if v == 0 or (v > 0) != (want > 0):
                holds = False
                break
    return SignVerdict(tag=tag, q0=q0, holds_from_2=holds)
