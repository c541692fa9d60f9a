"""Ground-truth enumeration: fields, canonical bases, relations, cross-checks."""

import io
import itertools
from pathlib import Path

import pytest

from polarcensus.census import count_rank
from polarcensus.degrees import GraphKind, degree
from polarcensus.errors import (
    DimensionMismatch,
    IndexOutOfRange,
    TooLarge,
    UnsupportedField,
)
from polarcensus.gf import FiniteField
from polarcensus.oracle import (
    build_space,
    cross_check,
    echelon_form,
    enumerate_subspaces,
    export_layer,
    measured_degree,
    relation,
)

DATA = Path(__file__).parent / "data"


# ---------------------------------------------------------------------------
# finite fields

@pytest.mark.parametrize("order", [2, 3, 4, 5, 9])
def test_field_axioms_exhaustive(order):
    f = FiniteField(order)
    elems = range(order)
    for a, b in itertools.product(elems, repeat=2):
        assert f.add(a, b) == f.add(b, a)
        assert f.mul(a, b) == f.mul(b, a)
    for a, b, c in itertools.product(elems, repeat=3):
        assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
        assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    for a in elems:
        assert f.add(a, f.neg(a)) == 0
        assert f.add(a, 0) == a
        assert f.mul(a, 1) == a
        if a:
            assert f.mul(a, f.inv(a)) == 1
    with pytest.raises(ZeroDivisionError):
        f.inv(0)


@pytest.mark.parametrize("order", [4, 9])
def test_conjugation_is_the_frobenius_involution(order):
    f = FiniteField(order)
    for a in range(order):
        assert f.conj(f.conj(a)) == a
        for b in range(order):
            assert f.conj(f.mul(a, b)) == f.mul(f.conj(a), f.conj(b))
    # fixed field is the prime field
    p = 2 if order == 4 else 3
    fixed = [a for a in range(order) if f.conj(a) == a]
    assert len(fixed) == p


def test_prime_field_conjugation_is_identity():
    f = FiniteField(5)
    assert all(f.conj(a) == a for a in range(5))


def test_unsupported_field_orders():
    for bad in (6, 8, 12, 1):
        with pytest.raises(UnsupportedField):
            FiniteField(bad)


# ---------------------------------------------------------------------------
# space construction guards

def test_build_space_guards():
    with pytest.raises(UnsupportedField):
        build_space("symplectic", 7, 3)
    with pytest.raises(UnsupportedField):
        build_space("hermitian", 4, 3)
    with pytest.raises(UnsupportedField):
        build_space("moebius", 2, 3)
    with pytest.raises(TooLarge):
        build_space("symplectic", 2, 5, cap=1000)
    with pytest.raises(IndexOutOfRange):
        enumerate_subspaces(build_space("symplectic", 2, 3), 3)


def test_cap_env_override(monkeypatch):
    monkeypatch.setenv("POLAR_CENSUS_CAP", "100")
    with pytest.raises(TooLarge):
        build_space("symplectic", 2, 3)
    monkeypatch.setenv("POLAR_CENSUS_CAP", "1000000")
    build_space("symplectic", 2, 3)


# ---------------------------------------------------------------------------
# enumeration

def test_layer_sizes_match_count_formula():
    for kind, q in [("symplectic", 2), ("hyperbolic", 3), ("parabolic", 3)]:
        space = build_space(kind, q, 3)
        for i in range(3):
            assert len(enumerate_subspaces(space, i)) == count_rank(space.params, i)


def test_bases_are_reduced_echelon_and_unique():
    space = build_space("hyperbolic", 2, 3)
    lay = enumerate_subspaces(space, 1)
    seen = set()
    for rep in lay:
        assert echelon_form(space.field, rep.basis) == rep.basis
        assert rep.basis not in seen
        seen.add(rep.basis)
    assert len(seen) == len(lay)


def test_layer_is_sorted_canonically():
    space = build_space("symplectic", 2, 3)
    lay = enumerate_subspaces(space, 1)
    flat = [bytes(x for row in rep.basis for x in row) for rep in lay]
    assert flat == sorted(flat)


def test_points_per_subspace():
    space = build_space("hermitian", 2, 3)  # field GF(4)
    lay = enumerate_subspaces(space, 1)
    m = space.field.order
    assert lay.points.shape[1] == (m**2 - 1) // (m - 1)


def test_golden_layer_export():
    space = build_space("hyperbolic", 2, 3)
    buf = io.StringIO()
    lines = export_layer(space, 2, buf)
    assert lines == 30
    expected = (DATA / "hyperbolic_q2_n3_layer2.txt").read_text()
    assert buf.getvalue() == expected


# ---------------------------------------------------------------------------
# pairwise relations

def test_relation_matches_vectorized_scan():
    """The rank-based pair relation agrees with the bitmask/intersection scan."""
    space = build_space("elliptic", 2, 3)
    for i in (1, 2):
        lay = enumerate_subspaces(space, i)
        base = lay.rep(0)
        for kind in GraphKind:
            slow = sum(
                1 for other in lay if relation(space, base, other, kind)
            )
            assert slow == measured_degree(space, i, kind, sample=1), (i, kind)


def test_relation_is_symmetric_and_loopless():
    space = build_space("symplectic", 3, 3)
    lay = enumerate_subspaces(space, 1)
    a, b, c = lay.rep(0), lay.rep(7), lay.rep(19)
    for kind in GraphKind:
        assert not relation(space, a, a, kind)
        for x, y in [(a, b), (a, c), (b, c)]:
            assert relation(space, x, y, kind) == relation(space, y, x, kind)


def test_relation_rejects_mixed_dimensions():
    space = build_space("symplectic", 2, 3)
    a = enumerate_subspaces(space, 0).rep(0)
    b = enumerate_subspaces(space, 1).rep(0)
    with pytest.raises(DimensionMismatch):
        relation(space, a, b, GraphKind.COLLINEARITY)


# ---------------------------------------------------------------------------
# cross-checks of formulas against enumeration

@pytest.mark.parametrize(
    "kind,q",
    [
        ("symplectic", 2),
        ("parabolic", 2),  # characteristic 2: the quadric, not the polar form
        ("hyperbolic", 2),
        ("elliptic", 2),
        ("hermitian", 2),
        ("hermitian-odd", 2),
        ("hyperbolic", 3),
        ("elliptic", 3),
        ("parabolic", 5),
    ],
)
def test_cross_check_rank_three(kind, q):
    report = cross_check(build_space(kind, q, 3))
    assert report.all_ok, report.mismatches


def test_cross_check_rank_four():
    report = cross_check(build_space("symplectic", 2, 4))
    assert report.all_ok, report.mismatches


@pytest.mark.slow
def test_cross_check_hermitian_q3():
    report = cross_check(build_space("hermitian", 3, 3))
    assert report.all_ok, report.mismatches


def test_derived_orders():
    assert build_space("hyperbolic", 2, 3).params.t == 1
    assert build_space("elliptic", 2, 3).params.t == 4
    assert build_space("hermitian", 2, 3).params.s == 4
    assert build_space("hermitian-odd", 2, 3).params.t == 8
