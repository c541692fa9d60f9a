"""Comparison checks on the count and degree formulas, and coincidence searches.

Three kinds of questions about a rank-n polar space of order (s, t):

  * how do |Delta_i| and |Delta_j| compare for i < j, and which integer
    inequalities in (n, i, j, log_s t) are forced when they tie;
  * do the monotonicity claims for the count sequence and for the five
    graph degrees hold at a given parameter point;
  * over a whole parameter grid, where do count ties |Delta_i| = |Delta_j|
    occur, and does any tie also tie a graph degree.

All comparisons are exact.  The half-integer log_s t = e/2 never appears
as a float: every inequality is multiplied through so it reads in the
integer L = 4n + e.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from . import census, degrees
from .degrees import GraphKind
from .errors import BadPair, BadTopOrder, NoValidS
from .params import PolarParams, top_order_for, validate_params


class Verdict(Enum):
    GREATER = "greater"
    EQUAL = "equal"
    LESS = "less"

    @property
    def symbol(self) -> str:
        return {"greater": ">", "equal": "=", "less": "<"}[self.value]


def _check_pair(p: PolarParams, i: int, j: int) -> None:
    if not 0 <= i < j <= p.n - 1:
        raise BadPair(f"need 0 <= i < j <= {p.n - 1}, got i={i}, j={j}")


def compare_counts(p: PolarParams, i: int, j: int) -> Verdict:
    """Exact trichotomy between |Delta_i| and |Delta_j| for i < j."""
    _check_pair(p, i, j)
    a = census.count_rank(p, i)
    b = census.count_rank(p, j)
    if a > b:
        return Verdict.GREATER
    if a < b:
        return Verdict.LESS
    return Verdict.EQUAL


@dataclass(frozen=True)
class BoundReport:
    """Which of the tie-necessary inequalities hold at (p, i, j).

    Each condition is an inequality in L = 4n + e (all original statements
    multiplied by 2 or 6 to clear the half-integer log_s t).  All seven are
    necessary conditions for |Delta_i| = |Delta_j|; the first four are the
    pruning set for the coincidence search.
    """

    conditions: tuple[tuple[str, bool], ...]

    def holds(self, name: str) -> bool:
        return dict(self.conditions)[name]

    @property
    def all_hold(self) -> bool:
        return all(ok for _, ok in self.conditions)

    @property
    def prune_set_holds(self) -> bool:
        d = dict(self.conditions)
        return d["sum_upper"] and d["sum_lower"] and d["two_i_plus_j"] and d["i_plus_two_j"]


def necessary_conditions(p: PolarParams, i: int, j: int) -> BoundReport:
    """Evaluate the seven tie-necessary inequalities exactly.

      sum_upper     2n + log_s t < 3(i+j+3)/2      (forced by |Di| >= |Dj|)
      sum_lower     2n + log_s t > 3(i+j+1)/2      (forced by |Di| <= |Dj|)
      two_i_plus_j  2n - 4 + log_s t >= 2i + j     (forced by |Di| <= |Dj|)
      i_plus_two_j  2n - 3 + log_s t <= i + 2j     (forced by |Di| <= |Dj|)
      band_upper    2n + log_s t - 2 >= 3(i+j)/2   (forced by a tie)
      band_lower    3(i+j)/2 >= 2n + log_s t - 4   (forced by a tie)
      window        2i+j+4 <= 2n + log_s t <= i+2j+3  (forced by a tie)
    """
    _check_pair(p, i, j)
    n, e = p.n, p.e
    ell = 4 * n + e  # 2 * (2n + log_s t)
    conds = (
        ("sum_upper", ell < 3 * (i + j + 3)),
        ("sum_lower", ell > 3 * (i + j + 1)),
        ("two_i_plus_j", 4 * n - 8 + e >= 4 * i + 2 * j),
        ("i_plus_two_j", 4 * n - 6 + e <= 2 * i + 4 * j),
        ("band_upper", ell - 4 >= 3 * (i + j)),
        ("band_lower", 3 * (i + j) >= ell - 8),
        ("window", 2 * (2 * i + j + 4) <= ell <= 2 * (i + 2 * j + 3)),
    )
    return BoundReport(conditions=conds)


# ---------------------------------------------------------------------------
# parameter grids

DEFAULT_GRID_S: tuple[int, ...] = (2, 3, 4, 9)
ALL_E: tuple[int, ...] = (0, 1, 2, 3, 4)


def grid_params(
    n_range: Iterable[int],
    e_set: Iterable[int] = ALL_E,
    s_set: Iterable[int] = DEFAULT_GRID_S,
) -> list[PolarParams]:
    """All valid parameter points, in (n, e, s) lexicographic order.

    (s, e) combinations with no integral t (odd e, non-square s) are skipped.
    """
    out = []
    for n in sorted(set(n_range)):
        for e in sorted(set(e_set)):
            for s in sorted(set(s_set)):
                try:
                    t = top_order_for(s, e)
                except BadTopOrder:
                    continue
                out.append(validate_params(n, s, t))
    return out


# ---------------------------------------------------------------------------
# verdict tables for the near-top comparison |Delta_i| vs |Delta_{n-2}|

TABLE_ROWS: tuple[int, ...] = (2, 3, 4, 5)


@dataclass(frozen=True)
class TableCell:
    """Verdict of |Delta_i| vs |Delta_{n-2}| at one (m, e) cell, across s."""

    m: int
    e: int
    n: int
    i: int
    j: int
    verdict: Verdict
    per_s: tuple[tuple[int, Verdict], ...]

    @property
    def s_dependent(self) -> bool:
        return any(v is not self.verdict for _, v in self.per_s)


@dataclass(frozen=True)
class VerdictTables:
    """The two tables: rows m = 2..5, columns e = 0..4.

    even[r][c] covers (n, i) = (2m, m-1) and odd[r][c] covers
    (n, i) = (2m+1, m), both against j = n-2, at m = TABLE_ROWS[r],
    e = c.
    """

    even: tuple[tuple[TableCell, ...], ...]
    odd: tuple[tuple[TableCell, ...], ...]

    @property
    def any_s_dependent(self) -> bool:
        return any(c.s_dependent for row in self.even + self.odd for c in row)


def _table_cell(m: int, e: int, n: int, i: int, s_values: Sequence[int]) -> TableCell:
    j = n - 2
    per_s = []
    for s in s_values:
        try:
            t = top_order_for(s, e)
        except BadTopOrder:
            continue
        per_s.append((s, compare_counts(validate_params(n, s, t), i, j)))
    if not per_s:
        raise NoValidS(f"no admissible s among {list(s_values)} for e={e}")
    return TableCell(m=m, e=e, n=n, i=i, j=j, verdict=per_s[0][1], per_s=tuple(per_s))


def special_case_tables(s_values: Sequence[int]) -> VerdictTables:
    """Verdicts of |Delta_i| vs |Delta_{n-2}| in the two boundary families.

    Even rows take (n, i) = (2m, m-1), odd rows (n, i) = (2m+1, m), the two
    shapes allowed by the tie-necessary inequalities when i < j = n - 2 and
    2i >= n - 2.  Each cell is evaluated at every admissible supplied s and
    flags any disagreement between them.
    """
    even = tuple(
        tuple(_table_cell(m, e, 2 * m, m - 1, s_values) for e in range(5))
        for m in TABLE_ROWS
    )
    odd = tuple(
        tuple(_table_cell(m, e, 2 * m + 1, m, s_values) for e in range(5))
        for m in TABLE_ROWS
    )
    return VerdictTables(even=even, odd=odd)


# ---------------------------------------------------------------------------
# proposition suite

@dataclass(frozen=True)
class PropositionCheck:
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class PropositionReport:
    params: PolarParams
    checks: tuple[PropositionCheck, ...]

    @property
    def all_pass(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> tuple[PropositionCheck, ...]:
        return tuple(c for c in self.checks if not c.ok)


def _check_profile(p: PolarParams) -> PropositionCheck:
    """Count sequence rises to i_max then falls; one flat step iff s = t and 2n = 1 mod 3."""
    prof = census.profile(p)
    im = census.i_max(p)
    bad: list[str] = []
    seen_down = False
    for idx, step in enumerate(prof.pattern):
        if step != census.DOWN and seen_down:
            bad.append(f"step {idx} rises after a fall")
        if step == census.DOWN:
            seen_down = True
    flats = [idx for idx, step in enumerate(prof.pattern) if step == census.FLAT]
    flat_expected = p.e == 2 and (2 * p.n) % 3 == 1
    if flat_expected:
        if flats != [im - 1]:
            bad.append(f"expected one flat step at {im - 1}, got {flats}")
        if prof.argmax_set != {im - 1, im}:
            bad.append(f"argmax {sorted(prof.argmax_set)} != {{{im - 1}, {im}}}")
    else:
        if flats:
            bad.append(f"unexpected flat steps at {flats}")
        if prof.argmax_set != {im}:
            bad.append(f"argmax {sorted(prof.argmax_set)} != {{{im}}}")
    return PropositionCheck("count_unimodal_peak", not bad, "; ".join(bad))


def _check_high_decreasing(p: PolarParams, label: str, fn) -> PropositionCheck:
    """Strict decrease of a degree on ceil((n-2)/2) <= i < j <= n-1."""
    lo = -((-(p.n - 2)) // 2)
    bad = []
    for i in range(lo, p.n):
        for j in range(i + 1, p.n):
            if not fn(p, i) > fn(p, j):
                bad.append(f"({i},{j})")
    return PropositionCheck(label, not bad, "violations at " + ", ".join(bad) if bad else "")


def _check_kappa_low_increasing(p: PolarParams) -> PropositionCheck:
    """Strict increase of kappa on i < j <= ceil((n-5+log_s t)/3), when 2n >= 10 - e."""
    if 2 * p.n < 10 - p.e:
        return PropositionCheck("collinearity_low_increasing", True, "vacuous: n below range")
    hi = -((-(2 * p.n - 10 + p.e)) // 6)
    if hi < 1:
        return PropositionCheck("collinearity_low_increasing", True, "vacuous: empty range")
    bad = []
    for i in range(0, hi + 1):
        for j in range(i + 1, hi + 1):
            if not degrees.degree_kappa(p, i) < degrees.degree_kappa(p, j):
                bad.append(f"({i},{j})")
    return PropositionCheck(
        "collinearity_low_increasing", not bad, "violations at " + ", ".join(bad) if bad else ""
    )


def _check_kappa_small_rank(p: PolarParams) -> PropositionCheck:
    """Full kappa profile at rank 3 and 4: k0 > k1 > k2, resp. k0 < k1 > k2 > k3."""
    name = "collinearity_small_rank_profile"
    k = [degrees.degree_kappa(p, i) for i in range(p.n)]
    if p.n == 3:
        ok = k[0] > k[1] > k[2]
        return PropositionCheck(name, ok, "" if ok else f"kappa profile {k}")
    if p.n == 4:
        ok = k[0] < k[1] > k[2] > k[3]
        return PropositionCheck(name, ok, "" if ok else f"kappa profile {k}")
    return PropositionCheck(name, True, "vacuous: rank above 4")


def _check_chain_decreasing(p: PolarParams, label: str, fn) -> PropositionCheck:
    """Strict decrease at every consecutive step below the top rank."""
    bad = []
    for i in range(p.n - 1):
        if not fn(p, i) > fn(p, i + 1):
            bad.append(f"({i},{i + 1})")
    return PropositionCheck(label, not bad, "violations at " + ", ".join(bad) if bad else "")


def _check_degrees_distinguish(p: PolarParams) -> PropositionCheck:
    """kappa, chi, xi pairwise distinct on the high range (witnesses non-isomorphism)."""
    lo = -((-(p.n - 2)) // 2)
    bad = []
    for i in range(lo, p.n):
        for j in range(i + 1, p.n):
            for label, fn in (
                ("kappa", degrees.degree_kappa),
                ("chi", degrees.degree_chi),
                ("xi", degrees.degree_xi),
            ):
                if fn(p, i) == fn(p, j):
                    bad.append(f"{label}({i})={label}({j})")
    return PropositionCheck(
        "degrees_distinguish_high_range", not bad, "; ".join(bad)
    )


def verify_propositions(p: PolarParams) -> PropositionReport:
    """Run every monotonicity and shape claim at one parameter point."""
    checks = (
        _check_profile(p),
        _check_high_decreasing(p, "collinearity_high_decreasing", degrees.degree_kappa),
        _check_kappa_low_increasing(p),
        _check_kappa_small_rank(p),
        _check_high_decreasing(p, "union_high_decreasing", degrees.degree_chi),
        _check_high_decreasing(p, "perp_max_high_decreasing", degrees.degree_xi),
        _check_chain_decreasing(p, "hyperplane_meet_decreasing", degrees.degree_mu),
        _check_chain_decreasing(p, "meet_collinear_decreasing", degrees.degree_nu),
        _check_degrees_distinguish(p),
    )
    return PropositionReport(params=p, checks=checks)


# ---------------------------------------------------------------------------
# coincidence searches

@dataclass(frozen=True)
class CoincidenceHit:
    """A tie |Delta_i| = |Delta_j| at one parameter point."""

    params: PolarParams
    i: int
    j: int
    value: int


@dataclass(frozen=True)
class ConjectureViolation:
    """A count tie whose graphs also tie in degree under some kind."""

    hit: CoincidenceHit
    kind: GraphKind
    degree_value: int


def search_coincidences(
    n_range: Iterable[int],
    e_set: Iterable[int] = ALL_E,
    s_set: Iterable[int] = DEFAULT_GRID_S,
    use_pruning: bool = True,
) -> list[CoincidenceHit]:
    """All count ties over the grid, in (n, e, s, i, j) order.

    With use_pruning, pairs failing one of the four tie-necessary
    inequalities are skipped before any big-integer comparison; pruned and
    unpruned runs return identical hits (tested, not assumed).
    """
    hits = []
    for p in grid_params(n_range, e_set, s_set):
        counts = [census.count_rank(p, i) for i in range(p.n)]
        for i in range(p.n):
            for j in range(i + 1, p.n):
                if use_pruning and not necessary_conditions(p, i, j).prune_set_holds:
                    continue
                if counts[i] == counts[j]:
                    hits.append(CoincidenceHit(params=p, i=i, j=j, value=counts[i]))
    return hits


DEFAULT_CONJECTURE_KINDS: tuple[GraphKind, ...] = (
    GraphKind.COLLINEARITY,
    GraphKind.UNION,
    GraphKind.PERP_MAX,
)


def search_conjecture(
    n_range: Iterable[int],
    e_set: Iterable[int] = ALL_E,
    s_set: Iterable[int] = DEFAULT_GRID_S,
    kinds: Iterable[GraphKind] = DEFAULT_CONJECTURE_KINDS,
) -> list[ConjectureViolation]:
    """Count ties that are also degree ties; expected empty on every grid."""
    violations = []
    for hit in search_coincidences(n_range, e_set, s_set):
        for kind in kinds:
            a = degrees.degree(hit.params, hit.i, kind)
            b = degrees.degree(hit.params, hit.j, kind)
            if a == b:
                violations.append(
                    ConjectureViolation(hit=hit, kind=kind, degree_value=a)
                )
    return violations
