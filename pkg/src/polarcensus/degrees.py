"""Degrees of five regular graphs on the singular i-spaces of a polar space.

Fix a rank-n polar space of order (s, t) and a projective dimension i.
Two distinct singular i-spaces I, J can be related by:

    collinear      every point of I is collinear with every point of J
                   (equivalently span(I, J) is singular); degree kappa(i)
    hyperplane     I meet J has projective dimension i - 1; degree mu(i)
    union          collinear or hyperplane-meeting; degree chi(i)
    intersection   collinear and hyperplane-meeting; degree nu(i)
    perp-max       collinear with singular span of dimension n - 1;
                   degree xi(i)

kappa(i) decomposes over the dimension k of I meet J, k running from
k_min(i) = max(2i - n + 1, -1) to i - 1.  Each component counts pairs with
a fixed meet dimension:

    kappa_{i,k} = F_{i,k} * G_{i,k}
    F_{i,k} = prod_{u=n-2i+k-1}^{n-i-2} (s^u t + 1)
    G_{i,k} = s^((i-k)^2) * gauss(i+1, k+1) * gauss(n-i-1, i-k)

with gauss(m, r) the number of r-dimensional subspaces of an m-space.
lambda(i) counts the hyperplane-meeting, non-collinear pairs and has the
closed form s^(2n-2i-2) t (s^(i+1) - 1)/(s - 1), so chi = kappa + lambda
and mu = nu + lambda.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import BadIntersectionDim, IndexOutOfRange
from .exact import exact_div, gaussian_binomial, geometric_sum
from .params import PolarParams


class GraphKind(Enum):
    COLLINEARITY = "collinearity"
    HYPERPLANE_MEET = "hyperplane-meet"
    UNION = "union"
    INTERSECTION = "intersection"
    PERP_MAX = "perp-max"


def _check_index(p: PolarParams, i: int) -> None:
    if not 0 <= i <= p.n - 1:
        raise IndexOutOfRange(f"i must be in 0..{p.n - 1}, got {i}")


def k_min(p: PolarParams, i: int) -> int:
    """Least possible meet dimension of two collinear i-spaces (-1 = disjoint)."""
    _check_index(p, i)
    return max(2 * i - p.n + 1, -1)


def kappa_component(p: PolarParams, i: int, k: int) -> int:
    """Number of i-spaces collinear with a fixed one and meeting it in dimension k."""
    _check_index(p, i)
    if not k_min(p, i) <= k <= i - 1:
        raise BadIntersectionDim(
            f"k must be in {k_min(p, i)}..{i - 1} for n={p.n}, i={i}, got {k}"
        )
    n, s, t = p.n, p.s, p.t
    f = 1
    for u in range(n - 2 * i + k - 1, n - i - 1):
        f *= s**u * t + 1
    g = (
        s ** ((i - k) ** 2)
        * gaussian_binomial(i + 1, k + 1, s)
        * gaussian_binomial(n - i - 1, i - k, s)
    )
    return f * g


@dataclass(frozen=True)
class KappaDecomposition:
    """kappa(i) split by meet dimension k; total == sum of the components."""

    i: int
    components: tuple[tuple[int, int], ...]  # (k, kappa_{i,k}) ascending in k
    total: int


def kappa_decomposition(p: PolarParams, i: int) -> KappaDecomposition:
    _check_index(p, i)
    comps = tuple((k, kappa_component(p, i, k)) for k in range(k_min(p, i), i))
    return KappaDecomposition(i=i, components=comps, total=sum(c for _, c in comps))


def degree_kappa(p: PolarParams, i: int) -> int:
    """Degree of the collinearity graph on singular i-spaces (0 for generators)."""
    return kappa_decomposition(p, i).total


def degree_lambda(p: PolarParams, i: int) -> int:
    """Number of i-spaces meeting a fixed one in a hyperplane, not collinear with it."""
    _check_index(p, i)
    n, s, t = p.n, p.s, p.t
    return s ** (2 * n - 2 * i - 2) * t * geometric_sum(s, i + 1)


def degree_chi(p: PolarParams, i: int) -> int:
    """Degree of the union graph: collinear or hyperplane-meeting."""
    return degree_kappa(p, i) + degree_lambda(p, i)


def degree_xi(p: PolarParams, i: int) -> int:
    """Degree of the graph joining i-spaces whose span is a generator.

    Zero when 2i < n - 2 (spans cannot reach dimension n - 1) and for
    i == n - 1 (distinct generators never span a generator).
    """
    _check_index(p, i)
    n, s, t = p.n, p.s, p.t
    if 2 * i < n - 2 or i == n - 1:
        return 0
    num = s ** ((n - i - 1) ** 2)
    for u in range(n - i - 1):
        num *= s**u * t + 1
    for u in range(n - i, i + 2):
        num *= s**u - 1
    den = 1
    for u in range(1, 2 * i - n + 3):
        den *= s**u - 1
    return exact_div(num, den)


def degree_mu(p: PolarParams, i: int) -> int:
    """Degree of the hyperplane-meet graph on singular i-spaces.

    Computed as A*(B - 1) with A the number of hyperplanes of an i-space and
    B the number of singular (i)-spaces through a fixed (i-1)-space, then
    cross-checked against the expanded single-quotient form.
    """
    _check_index(p, i)
    n, s, t = p.n, p.s, p.t
    a = geometric_sum(s, i + 1)
    b = exact_div((s ** (n - i - 1) * t + 1) * (s ** (n - i) - 1), s - 1)
    value = a * (b - 1)
    expanded = exact_div(
        (s ** (2 * n - 2 * i - 1) * t - s ** (n - i - 1) * t + s ** (n - i) - s)
        * (s ** (i + 1) - 1),
        (s - 1) ** 2,
    )
    assert value == expanded
    return value


def degree_nu(p: PolarParams, i: int) -> int:
    """Degree of the intersection graph: hyperplane-meeting and collinear.

    Zero for generators; the closed form below only applies for i <= n - 2.
    """
    _check_index(p, i)
    n, s, t = p.n, p.s, p.t
    if i == n - 1:
        return 0
    a = geometric_sum(s, i + 1)
    c = exact_div(s * (s ** (n - i - 2) * t + 1) * (s ** (n - i - 1) - 1), s - 1)
    return a * c


_DEGREE_BY_KIND = {
    GraphKind.COLLINEARITY: degree_kappa,
    GraphKind.HYPERPLANE_MEET: degree_mu,
    GraphKind.UNION: degree_chi,
    GraphKind.INTERSECTION: degree_nu,
    GraphKind.PERP_MAX: degree_xi,
}


def degree(p: PolarParams, i: int, kind: GraphKind) -> int:
    """Dispatch to the degree formula for the requested graph."""
    return _DEGREE_BY_KIND[kind](p, i)
