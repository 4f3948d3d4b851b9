"""Table-driven vector and matrix arithmetic over small fields.

Vectors and matrices are numpy integer arrays holding element encodings; every
operation goes through precomputed q-by-q lookup tables built from
:mod:`cyclotome.field`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .field import FieldSpec

TABLE_CAP = 256


@dataclass(frozen=True, eq=False)
class GF:
    spec: FieldSpec
    add: np.ndarray
    sub: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    inv: np.ndarray
    conj: np.ndarray | None  # x -> x**sqrt(q) when q is a square

    @property
    def q(self) -> int:
        return self.spec.order

    @property
    def char2(self) -> bool:
        return self.spec.p == 2

    # python-list views for scalar inner loops
    @property
    def lists(self) -> tuple[list, list, list, list]:
        cached = self.__dict__.get("_lists")
        if cached is None:
            cached = (self.add.tolist(), self.sub.tolist(), self.mul.tolist(), self.inv.tolist())
            object.__setattr__(self, "_lists", cached)
        return cached

    def vadd(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.char2:
            return np.bitwise_xor(a, b)
        return self.add[a, b]

    def vsub(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.char2:
            return np.bitwise_xor(a, b)
        return self.sub[a, b]

    def scale(self, c: int, v: np.ndarray) -> np.ndarray:
        return self.mul[c, v]

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """(r x m) @ (m x c) over GF(q)."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        for j in range(a.shape[1]):
            out = self.vadd(out, self.mul[a[:, j][:, None], b[j][None, :]])
        return out

    def conjugate(self, a: np.ndarray) -> np.ndarray:
        if self.conj is None:
            raise ValueError(f"{self.spec!r} has no Hermitian conjugation")
        return self.conj[np.asarray(a, dtype=np.int64)]

    def rref(self, m: np.ndarray) -> tuple[np.ndarray, list[int]]:
        """Reduced row echelon form and pivot columns."""
        m = np.array(m, dtype=np.int64, copy=True)
        if m.ndim != 2:
            raise ValueError("rref expects a matrix")
        rows, cols = m.shape
        if rows == 0 or cols == 0:
            return m[:0], []
        pivots: list[int] = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            nz = np.nonzero(m[r:, c])[0]
            if nz.size == 0:
                continue
            piv = r + nz[0]
            if piv != r:
                m[[r, piv]] = m[[piv, r]]
            m[r] = self.mul[self.inv[m[r, c]], m[r]]
            factors = m[:, c].copy()
            factors[r] = 0
            hit = np.nonzero(factors)[0]
            if hit.size:
                m[hit] = self.vsub(m[hit], self.mul[factors[hit][:, None], m[r][None, :]])
            pivots.append(c)
            r += 1
        return m[:r], pivots

    def rank(self, m: np.ndarray) -> int:
        return len(self.rref(m)[1])

    def nullspace(self, m: np.ndarray, ncols: int | None = None) -> np.ndarray:
        """Basis (as rows) of {x : m @ x = 0}."""
        m = np.asarray(m, dtype=np.int64)
        if ncols is None:
            ncols = m.shape[1]
        if m.size == 0 or not m.any():
            return np.eye(ncols, dtype=np.int64)
        red, pivots = self.rref(m)
        free = [c for c in range(ncols) if c not in set(pivots)]
        basis = np.zeros((len(free), ncols), dtype=np.int64)
        for i, f in enumerate(free):
            basis[i, f] = 1
            for row, pc in enumerate(pivots):
                basis[i, pc] = self.neg[red[row, f]]
        return basis

    def in_rowspace(self, rows: np.ndarray, vecs: np.ndarray) -> bool:
        rows = np.asarray(rows, dtype=np.int64)
        vecs = np.atleast_2d(np.asarray(vecs, dtype=np.int64))
        if rows.size == 0:
            return not np.any(vecs)
        return self.rank(np.vstack([rows, vecs])) == self.rank(rows)

    def span(self, rows: np.ndarray) -> np.ndarray:
        """Every vector in the row span (small spans only)."""
        rows = np.asarray(rows, dtype=np.int64)
        k = rows.shape[0]
        words = np.zeros((1, rows.shape[1]), dtype=np.int64)
        for i in range(k):
            words = np.concatenate([self.vadd(words, self.mul[c, rows[i]][None, :]) for c in range(self.q)])
        return words


@lru_cache(maxsize=None)
def gf(spec: FieldSpec) -> GF:
    """Lookup tables for ``spec`` (q <= TABLE_CAP)."""
    q = spec.order
    if q > TABLE_CAP:
        raise ValueError(f"{spec!r} too large for table arithmetic")
    els = list(spec.elements())
    add = np.zeros((q, q), dtype=np.int64)
    sub = np.zeros((q, q), dtype=np.int64)
    mul = np.zeros((q, q), dtype=np.int64)
    for i, a in enumerate(els):
        for j, b in enumerate(els):
            add[i, j] = (a + b).enc
            sub[i, j] = (a - b).enc
            mul[i, j] = (a * b).enc
    neg = sub[0].copy()
    inv = np.zeros(q, dtype=np.int64)
    for i in range(1, q):
        inv[i] = int(np.nonzero(mul[i] == 1)[0][0])
    conj = None
    root = math.isqrt(q)
    if root * root == q and spec.e % 2 == 0:
        conj = np.array([(a**root).enc for a in els], dtype=np.int64)
    return GF(spec, add, sub, mul, neg, inv, conj)
