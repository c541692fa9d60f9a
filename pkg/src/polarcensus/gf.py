"""Table-driven arithmetic for the tiny fields GF(2), GF(3), GF(4), GF(5), GF(9).

Elements are integers 0..m-1.  Prime fields are residues.  For m = p**2 the
element a0 + a1*x is encoded as a0 + p*a1, with x a root of an irreducible
monic quadratic x^2 + b*x + c found by search.  All operations are exposed
both as scalar methods and as numpy lookup tables (ADD, MUL, NEG, INV, CONJ)
so bulk form evaluations vectorize.
"""

from __future__ import annotations

import numpy as np

from .errors import UnsupportedField


def _smallest_prime_factor(m: int) -> int:
    f = 2
    while f * f <= m:
        if m % f == 0:
            return f
        f += 1
    return m


class FiniteField:
    def __init__(self, order: int):
        if order < 2:
            raise UnsupportedField(f"order {order} is not a prime power")
        p = _smallest_prime_factor(order)
        if order == p:
            d = 1
        elif order == p * p:
            d = 2
        else:
            raise UnsupportedField(f"order {order} is not p or p^2 for a prime p")
        self.order = order
        self.p = p
        self.d = d
        if d == 1:
            add = [[(a + b) % p for b in range(p)] for a in range(p)]
            mul = [[(a * b) % p for b in range(p)] for a in range(p)]
        else:
            b, c = self._find_irreducible(p)
            self._quad = (b, c)
            add = [[0] * order for _ in range(order)]
            mul = [[0] * order for _ in range(order)]
            for a in range(order):
                a0, a1 = a % p, a // p
                for bb in range(order):
                    b0, b1 = bb % p, bb // p
                    add[a][bb] = self._enc(p, (a0 + b0) % p, (a1 + b1) % p)
                    # (a0 + a1 x)(b0 + b1 x) with x^2 = -b x - c
                    hi = a1 * b1
                    mid = a0 * b1 + a1 * b0
                    lo = a0 * b0
                    mul[a][bb] = self._enc(p, (lo - c * hi) % p, (mid - b * hi) % p)
        self.ADD = np.array(add, dtype=np.uint8)
        self.MUL = np.array(mul, dtype=np.uint8)
        neg = [0] * order
        inv = [0] * order
        for a in range(order):
            for bb in range(order):
                if self.ADD[a][bb] == 0:
                    neg[a] = bb
                if a != 0 and self.MUL[a][bb] == 1:
                    inv[a] = bb
        self.NEG = np.array(neg, dtype=np.uint8)
        self.INV = np.array(inv, dtype=np.uint8)
        conj = [self._pow(a, p) for a in range(order)] if d == 2 else list(range(order))
        self.CONJ = np.array(conj, dtype=np.uint8)

    @staticmethod
    def _enc(p: int, a0: int, a1: int) -> int:
        return a0 + p * a1

    @staticmethod
    def _find_irreducible(p: int) -> tuple[int, int]:
        """Coefficients (b, c) with x^2 + b*x + c rootless over GF(p)."""
        for b in range(p):
            for c in range(1, p):
                if all((x * x + b * x + c) % p != 0 for x in range(p)):
                    return b, c
        raise AssertionError("no irreducible quadratic found")  # unreachable for prime p

    def _pow(self, a: int, k: int) -> int:
        r = 1
        while k:
            if k & 1:
                r = int(self.MUL[r, a])
            a = int(self.MUL[a, a])
            k >>= 1
        return r

    # scalar operations

    def add(self, a: int, b: int) -> int:
        return int(self.ADD[a, b])

    def mul(self, a: int, b: int) -> int:
        return int(self.MUL[a, b])

    def neg(self, a: int) -> int:
        return int(self.NEG[a])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return int(self.INV[a])

    def conj(self, a: int) -> int:
        return int(self.CONJ[a])

    def sub(self, a: int, b: int) -> int:
        return int(self.ADD[a, self.NEG[b]])

    def __repr__(self) -> str:
        return f"FiniteField({self.order})"
