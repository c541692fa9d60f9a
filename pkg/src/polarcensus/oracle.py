"""Brute-force ground truth: explicit classical polar spaces over tiny fields.

A FormSpace is a vector space over GF(q) or GF(q^2) carrying an alternating,
quadratic, or hermitian form.  Points are canonical projective
representatives (leading coordinate 1) of singular 1-spaces, in
lexicographic order.  Higher singular subspaces are enumerated by a
canonical-extension rule that emits each subspace exactly once:

    a reduced-echelon basis with pivot columns c_1 < ... < c_k is extended
    only by singular points v orthogonal to every basis row, whose pivot
    column c satisfies c > c_k and is zero in every existing row.

The parent of a (k+1)-row reduced-echelon basis is its first k rows and the
extension vector is its own last row, so each subspace arrives exactly once
and the extended matrix is already in reduced echelon form.  For quadratic
forms in characteristic 2 the quadratic form is the ground truth for
singularity and the polar form B(x,y) = Q(x+y) - Q(x) - Q(y) defines
collinearity; adjoining a singular v with B(v, row) = 0 for all rows keeps
the span singular for every form kind handled here.

Collinearity between points is precomputed as per-point bitmasks (python
integers) over the point list; pair scans run vectorized over numpy arrays
of per-subspace point indices.
"""

from __future__ import annotations

import os
import random
from array import array
from dataclasses import dataclass

import numpy as np

from .census import count_rank
from .degrees import GraphKind, degree as degree_formula
from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    NotRegular,
    TooLarge,
    UnsupportedField,
)
from .gf import FiniteField
from .params import PolarParams, validate_params

SAMPLE_SEED = 1729  # fixed so any regularity failure reproduces exactly
DEFAULT_CAP = 2_000_000
CAP_ENV = "POLAR_CENSUS_CAP"

ORACLE_KINDS = (
    "symplectic",
    "parabolic",
    "hyperbolic",
    "elliptic",
    "hermitian",
    "hermitian-odd",
)


def default_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    return int(raw) if raw else DEFAULT_CAP


@dataclass(frozen=True)
class SubspaceRep:
    """A singular subspace as its reduced-echelon basis over the field."""

    dim: int
    basis: tuple[tuple[int, ...], ...]


class Layer:
    """All singular subspaces of one projective dimension, in canonical order.

    rows[b] is the reduced-echelon basis of subspace b, basis_idx[b] the
    point index of each basis row, points[b] the indices of every point it
    contains.  Canonical order is lexicographic on the concatenated basis
    rows, which makes enumeration output reproducible byte-for-byte.
    """

    def __init__(self, i: int, rows: np.ndarray, basis_idx: np.ndarray, points: np.ndarray):
        self.i = i
        self.rows = rows
        self.basis_idx = basis_idx
        self.points = points

    def __len__(self) -> int:
        return len(self.rows)

    def rep(self, idx: int) -> SubspaceRep:
        return SubspaceRep(
            dim=self.i,
            basis=tuple(tuple(int(x) for x in row) for row in self.rows[idx]),
        )

    def __iter__(self):
        for idx in range(len(self)):
            yield self.rep(idx)


def _all_tuples(m: int, k: int) -> np.ndarray:
    """All k-tuples over 0..m-1 in lexicographic order, shape (m**k, k)."""
    if k == 0:
        return np.zeros((1, 0), dtype=np.uint8)
    a = np.arange(m**k, dtype=np.int64)
    out = np.empty((m**k, k), dtype=np.uint8)
    for pos in range(k):
        out[:, pos] = (a // m ** (k - 1 - pos)) % m
    return out


class FormSpace:
    """An explicit classical polar space used as an enumeration oracle."""

    def __init__(self, kind: str, q: int, n: int, cap: int | None = None):
        kind = kind.lower().replace("_", "-")
        if kind not in ORACLE_KINDS:
            raise UnsupportedField(f"unknown space kind {kind!r}")
        if q not in (2, 3, 4, 5):
            raise UnsupportedField(f"q must be one of 2, 3, 4, 5, got {q}")
        if kind.startswith("hermitian") and q not in (2, 3):
            raise UnsupportedField(f"hermitian spaces need q in {{2, 3}}, got {q}")
        self.kind = kind
        self.q = q
        self.n = n
        self.cap = default_cap() if cap is None else cap

        if kind == "symplectic":
            field_order, dim, s, t = q, 2 * n, q, q
        elif kind == "parabolic":
            field_order, dim, s, t = q, 2 * n + 1, q, q
        elif kind == "hyperbolic":
            field_order, dim, s, t = q, 2 * n, q, 1
        elif kind == "elliptic":
            field_order, dim, s, t = q, 2 * n + 2, q, q * q
        elif kind == "hermitian":
            field_order, dim, s, t = q * q, 2 * n, q * q, q
        else:  # hermitian-odd
            field_order, dim, s, t = q * q, 2 * n + 1, q * q, q**3
        self.field = FiniteField(field_order)
        self.dim = dim
        self.s = s
        self.t = t
        self.params: PolarParams = validate_params(n, s, t)

        worst = max(count_rank(self.params, i) for i in range(n))
        if worst > self.cap:
            raise TooLarge(
                f"{kind} q={q} rank {n} needs up to {worst} subspaces per rank, "
                f"cap is {self.cap}"
            )

        self.hermitian = kind.startswith("hermitian")
        self.quad: tuple[tuple[int, int, int], ...] | None = None
        self.gram: np.ndarray | None = None
        if kind == "symplectic":
            g = np.zeros((dim, dim), dtype=np.uint8)
            for u in range(n):
                g[2 * u, 2 * u + 1] = 1
                g[2 * u + 1, 2 * u] = self.field.neg(1)
            self.gram = g
        elif kind == "parabolic":
            self.quad = ((0, 0, 1),) + tuple((2 * u + 1, 2 * u + 2, 1) for u in range(n))
        elif kind == "hyperbolic":
            self.quad = tuple((2 * u, 2 * u + 1, 1) for u in range(n))
        elif kind == "elliptic":
            c = self._anisotropic_coefficient()
            self.quad = ((0, 0, 1), (0, 1, 1), (1, 1, c)) + tuple(
                (2 * u + 2, 2 * u + 3, 1) for u in range(n)
            )
        if self.quad is not None:
            # polar form of the quadratic form: M = C + C^T over the field
            g = np.zeros((dim, dim), dtype=np.uint8)
            f = self.field
            for a, b, c in self.quad:
                g[a, b] = f.add(int(g[a, b]), c)
                g[b, a] = f.add(int(g[b, a]), c)
            self.gram = g

        self._pts: np.ndarray | None = None
        self._pts_bytes: list[bytes] | None = None
        self._pt_index: dict[bytes, int] | None = None
        self._pt_masks: list[int] | None = None
        self._pivot: np.ndarray | None = None
        self._piv_ge: list[int] | None = None
        self._piv_block: list[int] | None = None
        self._layers: dict[int, Layer] = {}
        self._stats: dict[tuple[int, int], tuple[np.ndarray, np.ndarray]] = {}

    # ------------------------------------------------------------------
    # form evaluation

    def _anisotropic_coefficient(self) -> int:
        """c such that z^2 + z + c has no root, so x^2 + xy + c*y^2 is anisotropic."""
        f = self.field
        for c in range(1, f.order):
            if all(f.add(f.add(f.mul(z, z), z), c) != 0 for z in range(f.order)):
                return c
        raise AssertionError("no anisotropic binary quadratic over a finite field")

    def _singular_mask(self, V: np.ndarray) -> np.ndarray:
        f = self.field
        if self.kind == "symplectic":
            return np.ones(len(V), dtype=bool)
        acc = np.zeros(len(V), dtype=np.uint8)
        if self.hermitian:
            for u in range(self.dim):
                acc = f.ADD[acc, f.MUL[V[:, u], f.CONJ[V[:, u]]]]
        else:
            for a, b, c in self.quad:
                acc = f.ADD[acc, f.MUL[f.MUL[V[:, a], V[:, b]], c]]
        return acc == 0

    def _transform(self, V: np.ndarray) -> np.ndarray:
        """W with B(x, y) = sum_u x_u * W_y[u] for rows y of V."""
        f = self.field
        if self.hermitian:
            return f.CONJ[V]
        W = np.zeros_like(V)
        for u in range(self.dim):
            col = np.zeros(len(V), dtype=np.uint8)
            for w in range(self.dim):
                g = int(self.gram[u, w])
                if g:
                    col = f.ADD[col, f.MUL[g, V[:, w]]]
            W[:, u] = col
        return W

    # ------------------------------------------------------------------
    # points and collinearity masks

    def _ensure_points(self) -> None:
        if self._pts is not None:
            return
        m, D = self.field.order, self.dim
        blocks = []
        for c in range(D):
            tails = _all_tuples(m, D - c - 1)
            block = np.zeros((len(tails), D), dtype=np.uint8)
            block[:, c] = 1
            if D - c - 1:
                block[:, c + 1 :] = tails
            blocks.append(block)
        V = np.vstack(blocks)
        V = V[self._singular_mask(V)]
        V = V[np.lexsort(V.T[::-1])]
        self._pts = V
        self._pts_bytes = [row.tobytes() for row in V]
        self._pt_index = {b: i for i, b in enumerate(self._pts_bytes)}
        piv = np.argmax(V != 0, axis=1).astype(np.int64)
        self._pivot = piv
        block_masks = [0] * D
        for idx, c in enumerate(piv):
            block_masks[int(c)] |= 1 << idx
        ge = [0] * (D + 1)
        for c in range(D - 1, -1, -1):
            ge[c] = ge[c + 1] | block_masks[c]
        self._piv_block = block_masks
        self._piv_ge = ge

    def _ensure_masks(self) -> None:
        if self._pt_masks is not None:
            return
        self._ensure_points()
        f = self.field
        V = self._pts
        N = len(V)
        W = self._transform(V)
        masks: list[int] = []
        chunk = max(1, (1 << 22) // max(N, 1))
        for lo in range(0, N, chunk):
            X = V[lo : lo + chunk]
            acc = np.zeros((len(X), N), dtype=np.uint8)
            for u in range(self.dim):
                acc = f.ADD[acc, f.MUL[X[:, u][:, None], W[:, u][None, :]]]
            packed = np.packbits(acc == 0, axis=1, bitorder="little")
            for row in packed:
                masks.append(int.from_bytes(row.tobytes(), "little"))
        self._pt_masks = masks

    def _unpack_mask(self, mask: int) -> np.ndarray:
        n = len(self._pts)
        raw = mask.to_bytes((n + 7) // 8, "little")
        bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
        return bits[:n].astype(bool)

    @property
    def num_points(self) -> int:
        self._ensure_points()
        return len(self._pts)

    # ------------------------------------------------------------------
    # enumeration

    def layer(self, i: int) -> Layer:
        if not 0 <= i <= self.n - 1:
            raise IndexOutOfRange(f"i must be in 0..{self.n - 1}, got {i}")
        if i not in self._layers:
            if i == 0:
                self._ensure_points()
                N = len(self._pts)
                idx = np.arange(N, dtype=np.int32)[:, None]
                self._layers[0] = Layer(
                    0, self._pts[:, None, :].copy(), idx, idx.copy()
                )
            else:
                self._layers[i] = self._extend(self.layer(i - 1))
        return self._layers[i]

    def _extend(self, parent: Layer) -> Layer:
        self._ensure_masks()
        f = self.field
        m = f.order
        D = self.dim
        pts = self._pts
        pts_bytes = self._pts_bytes
        pt_index = self._pt_index
        pt_masks = self._pt_masks
        piv_ge = self._piv_ge
        block = self._piv_block
        pivot = self._pivot
        ADD, MUL = f.ADD, f.MUL

        child_rows: list[bytes] = []
        child_basis = array("i")
        child_points = array("i")

        for b in range(len(parent)):
            bidx = parent.basis_idx[b]
            last_piv = int(pivot[bidx[-1]])
            if last_piv + 1 >= D:
                continue
            mask = pt_masks[int(bidx[0])]
            for x in bidx[1:]:
                mask &= pt_masks[int(x)]
            allowed = mask & piv_ge[last_piv + 1]
            if not allowed:
                continue
            rows = parent.rows[b]
            for c in np.flatnonzero(rows.any(axis=0)):
                if c > last_piv:
                    allowed &= ~block[int(c)]
            if not allowed:
                continue
            ppts = parent.points[b]
            U = pts[ppts]
            base_list = list(map(int, ppts))
            base_rows = rows.tobytes()
            base_basis = list(map(int, bidx))
            while allowed:
                low = allowed & -allowed
                v_idx = low.bit_length() - 1
                allowed ^= low
                new_pts = base_list + [v_idx]
                v = pts[v_idx]
                for lam in range(1, m):
                    sums = ADD[U, MUL[lam, v][None, :]]
                    new_pts.extend(pt_index[row.tobytes()] for row in sums)
                child_rows.append(base_rows + pts_bytes[v_idx])
                child_basis.extend(base_basis)
                child_basis.append(v_idx)
                child_points.extend(new_pts)

        k = parent.i + 2
        count = len(child_rows)
        assert count > 0, "no extensions found below the top rank"
        rows_arr = np.frombuffer(b"".join(child_rows), dtype=np.uint8).reshape(count, k, D)
        basis_arr = np.frombuffer(child_basis, dtype=np.intc).reshape(count, k)
        pts_per = len(child_points) // count
        points_arr = np.frombuffer(child_points, dtype=np.intc).reshape(count, pts_per)
        flat = rows_arr.reshape(count, k * D)
        order = np.lexsort(flat.T[::-1])
        return Layer(
            parent.i + 1,
            rows_arr[order].copy(),
            basis_arr[order].copy(),
            points_arr[order].copy(),
        )

    # ------------------------------------------------------------------
    # pair scans

    def _pair_stats(self, i: int, base_idx: int) -> tuple[np.ndarray, np.ndarray]:
        key = (i, base_idx)
        if key not in self._stats:
            self._ensure_masks()
            lay = self.layer(i)
            m = self.field.order
            P = lay.points.shape[1]
            base_pts = lay.points[base_idx]
            inter = np.isin(lay.points, base_pts).sum(axis=1)
            lut = np.full(P + 1, -2, dtype=np.int64)
            size = 0
            for d in range(-1, i + 1):
                lut[size] = d
                size = size * m + 1
            kdim = lut[inter]
            assert (kdim != -2).all(), "intersection size is not a subspace size"
            mask = self._pt_masks[int(lay.basis_idx[base_idx][0])]
            for x in lay.basis_idx[base_idx][1:]:
                mask &= self._pt_masks[int(x)]
            perp_row = self._unpack_mask(mask)
            coll = perp_row[lay.points].all(axis=1)
            self._stats[key] = (kdim, coll)
        return self._stats[key]

    def _count_kind(self, i: int, kind: GraphKind, kdim: np.ndarray, coll: np.ndarray) -> int:
        same = kdim == i
        meet = kdim == i - 1
        if kind is GraphKind.COLLINEARITY:
            sel = coll & ~same
        elif kind is GraphKind.HYPERPLANE_MEET:
            sel = meet
        elif kind is GraphKind.UNION:
            sel = (coll | meet) & ~same
        elif kind is GraphKind.INTERSECTION:
            sel = coll & meet
        elif kind is GraphKind.PERP_MAX:
            sel = coll & (kdim == 2 * i - self.n + 1) & ~same
        else:
            raise ValueError(f"unknown graph kind {kind!r}")
        return int(sel.sum())


def build_space(kind: str, q: int, n: int, cap: int | None = None) -> FormSpace:
    """Construct one of the six supported classical spaces, within the size cap."""
    return FormSpace(kind, q, n, cap)


def enumerate_subspaces(space: FormSpace, i: int) -> Layer:
    """Every totally singular projective i-space, exactly once, canonical order."""
    return space.layer(i)


def _bform(space: FormSpace, x: tuple[int, ...], y: tuple[int, ...]) -> int:
    f = space.field
    acc = 0
    if space.hermitian:
        for xu, yu in zip(x, y):
            acc = f.add(acc, f.mul(xu, f.conj(yu)))
        return acc
    for u in range(space.dim):
        w = 0
        for v in range(space.dim):
            g = int(space.gram[u, v])
            if g:
                w = f.add(w, f.mul(g, y[v]))
        acc = f.add(acc, f.mul(x[u], w))
    return acc


def echelon_form(field: FiniteField, vectors) -> tuple[tuple[int, ...], ...]:
    """Reduced row-echelon form of the span of the given vectors; zero rows dropped."""
    rows = [list(map(int, v)) for v in vectors]
    width = len(rows[0]) if rows else 0
    out: list[list[int]] = []
    pivots: list[int] = []
    for col in range(width):
        pivot_row = None
        for r in rows:
            if r[col] != 0 and all(r[c] == 0 for c in range(col)):
                pivot_row = r
                break
        if pivot_row is None:
            continue
        inv = field.inv(pivot_row[col])
        pivot_row = [field.mul(inv, x) for x in pivot_row]
        for r in rows:
            if r is not pivot_row and r[col] != 0:
                factor = field.neg(r[col])
                for c in range(width):
                    r[c] = field.add(r[c], field.mul(factor, pivot_row[c]))
        for r in out:
            if r[col] != 0:
                factor = field.neg(r[col])
                for c in range(width):
                    r[c] = field.add(r[c], field.mul(factor, pivot_row[c]))
        out.append(pivot_row)
        pivots.append(col)
    return tuple(tuple(r) for r in out)


def relation(space: FormSpace, rep_i: SubspaceRep, rep_j: SubspaceRep, kind: GraphKind) -> bool:
    """Whether {I, J} is an edge of the requested graph; never true for I = J."""
    if rep_i.dim != rep_j.dim:
        raise DimensionMismatch(f"dimensions {rep_i.dim} and {rep_j.dim} differ")
    i = rep_i.dim
    coll = all(
        _bform(space, x, y) == 0 for x in rep_i.basis for y in rep_j.basis
    )
    span = echelon_form(space.field, list(rep_i.basis) + list(rep_j.basis))
    span_dim = len(span) - 1  # projective
    kdim = 2 * i - span_dim  # dim(I) + dim(J) - dim(span), projectively
    same = kdim == i
    meet = kdim == i - 1
    if kind is GraphKind.COLLINEARITY:
        return coll and not same
    if kind is GraphKind.HYPERPLANE_MEET:
        return meet
    if kind is GraphKind.UNION:
        return (coll or meet) and not same
    if kind is GraphKind.INTERSECTION:
        return coll and meet
    if kind is GraphKind.PERP_MAX:
        return coll and span_dim == space.n - 1 and not same
    raise ValueError(f"unknown graph kind {kind!r}")


def measured_degree(space: FormSpace, i: int, kind: GraphKind, sample: int = 3) -> int:
    """Count neighbors of sampled base subspaces by full scan; assert regularity."""
    lay = space.layer(i)
    n_sub = len(lay)
    sample = max(1, min(sample, n_sub))
    rng = random.Random(SAMPLE_SEED)
    bases = sorted(rng.sample(range(n_sub), sample))
    degs = []
    for b in bases:
        kdim, coll = space._pair_stats(i, b)
        degs.append(space._count_kind(i, kind, kdim, coll))
    if len(set(degs)) != 1:
        raise NotRegular(
            f"{space.kind} q={space.q} i={i} {kind.value}: sampled degrees {degs}"
        )
    return degs[0]


@dataclass(frozen=True)
class CheckEntry:
    i: int
    aspect: str  # "count" or a GraphKind value
    formula: int
    oracle: int

    @property
    def ok(self) -> bool:
        return self.formula == self.oracle


@dataclass(frozen=True)
class CrossCheckReport:
    kind: str
    q: int
    n: int
    entries: tuple[CheckEntry, ...]

    @property
    def all_ok(self) -> bool:
        return all(e.ok for e in self.entries)

    @property
    def mismatches(self) -> tuple[CheckEntry, ...]:
        return tuple(e for e in self.entries if not e.ok)


def cross_check(space: FormSpace, sample: int = 3) -> CrossCheckReport:
    """Compare enumerated counts and measured degrees against the formulas."""
    p = space.params
    entries = []
    for i in range(space.n):
        lay = space.layer(i)
        entries.append(CheckEntry(i=i, aspect="count", formula=count_rank(p, i), oracle=len(lay)))
        for kind in GraphKind:
            entries.append(
                CheckEntry(
                    i=i,
                    aspect=kind.value,
                    formula=degree_formula(p, i, kind),
                    oracle=measured_degree(space, i, kind, sample),
                )
            )
    return CrossCheckReport(kind=space.kind, q=space.q, n=space.n, entries=tuple(entries))


def export_layer(space: FormSpace, i: int, fp) -> int:
    """Write one line per subspace: basis rows hex-packed, rows joined by ':'.

    Field elements are single hex digits (all supported orders are < 16).
    Returns the number of lines written.
    """
    lay = space.layer(i)
    for idx in range(len(lay)):
        line = ":".join(
            "".join(format(int(x), "x") for x in row) for row in lay.rows[idx]
        )
        fp.write(line + "\n")
    return len(lay)
