"""Minimum-weight oracles for linear codes.

Two independent routes:

* full enumeration of all q**k codewords (vectorised, low rows tabulated once);
* increasing-weight support search: for each support of size w, the columns of a
  parity-check matrix restricted to it are reduced incrementally along a
  depth-first walk; a dependent support yields the codewords it carries.

Both return a :class:`DistanceResult`; exact results always carry a witness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .config import DEFAULT_BUDGET, Budget
from .cyclic import AnyCode, LinearCode, as_linear
from .errors import NotSubcode, ZeroCode
from .linalg import GF

LOW_TABLE = 2**16

EXACT = "exact"
BOUNDS = "lower_and_upper"
FULL = "full_enumeration"
SUPPORT = "support_search"


@dataclass(frozen=True)
class DistanceResult:
    kind: str
    d_lo: float
    d_hi: Optional[float]
    method: str
    budget_spent: int
    witness: Optional[tuple[int, ...]] = None

    @property
    def exact(self) -> bool:
        return self.kind == EXACT

    @property
    def d(self) -> float:
        if not self.exact:
            raise ValueError("distance is only bounded")
        return self.d_lo

    def to_dict(self) -> dict:
        out: dict = {"kind": self.kind, "method": self.method, "budget_spent": self.budget_spent}
        if self.exact:
            out["d"] = _num(self.d_lo)
        else:
            out["d_lo"] = _num(self.d_lo)
            out["d_hi"] = _num(self.d_hi)
        out["witness"] = list(self.witness) if self.witness is not None else None
        return out


def _num(x):
    if x is None:
        return None
    if x == math.inf:
        return "inf"
    return int(x)


def _exact(w: float, method: str, spent: int, witness=None) -> DistanceResult:
    return DistanceResult(EXACT, w, w, method, spent, None if witness is None else tuple(int(v) for v in witness))


# -- full enumeration --------------------------------------------------------

def enumerate_min_weight(code: LinearCode, sub: Optional[LinearCode] = None
                         ) -> tuple[float, Optional[np.ndarray], int]:
    """Smallest weight of a nonzero codeword (outside ``sub`` if given), by brute force."""
    g = code.gf
    G = code.generator
    k, n = G.shape
    q = g.q
    kl = k
    while kl > 0 and q**kl > LOW_TABLE:
        kl -= 1
    low = g.span(G[k - kl:])
    high = g.span(G[: k - kl])
    h_sub = None
    if sub is not None:
        h_sub = sub.parity_check
        low_syn = g.matmul(low, h_sub.T) if h_sub.shape[0] else None
    best = math.inf
    witness = None
    spent = 0
    for off in high:
        words = g.vadd(low, off[None, :])
        weights = np.count_nonzero(words, axis=1)
        if h_sub is not None:
            if low_syn is None:
                break  # sub is the full space: nothing lies outside
            off_syn = g.matmul(off[None, :], h_sub.T)[0]
            inside = ~np.any(g.vadd(low_syn, off_syn[None, :]), axis=1)
            weights[inside] = n + 1
        weights[weights == 0] = n + 1
        spent += words.shape[0]
        i = int(np.argmin(weights))
        if weights[i] <= n and weights[i] < best:
            best = int(weights[i])
            witness = words[i].copy()
    return best, witness, spent


# -- support search ----------------------------------------------------------

class _SupportWalker:
    """Depth-first walk over supports of fixed size with incremental column reduction."""

    def __init__(self, g: GF, H: np.ndarray, on_dependent: Callable[[tuple[int, ...]], Optional[np.ndarray]]):
        self.g = g
        self.add, self.sub, self.mul, self.inv = g.lists
        self.cols = [list(map(int, H[:, j])) for j in range(H.shape[1])]
        self.n = H.shape[1]
        self.on_dependent = on_dependent
        self.nodes = 0

    def _reduce(self, col: list[int], basis: list[tuple[int, list[int]]]) -> Optional[tuple[int, list[int]]]:
        sub, mul = self.sub, self.mul
        for piv, b in basis:
            c = col[piv]
            if c:
                mc = mul[c]
                col = [sub[x][mc[y]] for x, y in zip(col, b)]
        for i, x in enumerate(col):
            if x:
                ix = self.mul[self.inv[x]]
                return i, [ix[y] for y in col]
        return None

    def walk(self, w: int) -> Optional[np.ndarray]:
        """First accepted codeword with support size exactly ``w`` (or None)."""
        path: list[int] = []

        def rec(start: int, basis: list, dependent: bool) -> Optional[np.ndarray]:
            depth = len(path)
            if depth == w:
                if dependent:
                    return self.on_dependent(tuple(path))
                return None
            for j in range(start, self.n - (w - depth) + 1):
                self.nodes += 1
                red = self._reduce(self.cols[j], basis)
                path.append(j)
                found = rec(j + 1, basis + [red] if red is not None else basis, dependent or red is None)
                path.pop()
                if found is not None:
                    return found
            return None

        return rec(0, [], False)


def _full_support_kernel(g: GF, H: np.ndarray, support: tuple[int, ...]) -> np.ndarray:
    """Codewords (as length-n rows) whose support is exactly ``support``."""
    sub = H[:, list(support)]
    basis = g.nullspace(sub, len(support))
    if basis.shape[0] == 0:
        return np.zeros((0, H.shape[1]), dtype=np.int64)
    vals = g.span(basis)
    vals = vals[np.all(vals != 0, axis=1)]
    words = np.zeros((vals.shape[0], H.shape[1]), dtype=np.int64)
    words[:, list(support)] = vals
    return words


def support_search(code: LinearCode, sub: Optional[LinearCode], w_max: int, node_budget: int
                   ) -> tuple[Optional[int], Optional[np.ndarray], int, int]:
    """Iterative deepening over support size.

    Returns ``(weight, witness, searched_through, nodes)``; ``searched_through`` is
    the largest weight whose supports were all examined.
    """
    g = code.gf
    H = code.parity_check
    n = code.n
    if H.shape[0] == 0:
        H = np.zeros((1, n), dtype=np.int64)
    h_sub = sub.parity_check if sub is not None else None

    def accept(support: tuple[int, ...]) -> Optional[np.ndarray]:
        words = _full_support_kernel(g, H, support)
        if words.shape[0] == 0:
            return None
        if h_sub is not None:
            if h_sub.shape[0] == 0:
                return None
            outside = np.any(g.matmul(words, h_sub.T), axis=1)
            words = words[outside]
            if words.shape[0] == 0:
                return None
        return words[0]

    walker = _SupportWalker(g, H, accept)
    searched = 0
    planned = 0
    for w in range(1, min(w_max, n) + 1):
        planned += sum(math.comb(n, i) for i in range(1, w + 1))
        if planned > node_budget:
            break
        hit = walker.walk(w)
        if hit is not None:
            return w, hit, w, walker.nodes
        searched = w
    return None, None, searched, walker.nodes


# -- public oracles -----------------------------------------------------------

def min_distance(code: AnyCode, budget: Budget = DEFAULT_BUDGET) -> DistanceResult:
    lin = as_linear(code)
    if lin.k == 0:
        raise ZeroCode("minimum distance of the zero code is undefined")
    return _min_weight(lin, None, budget)


def min_weight_outside(code: AnyCode, sub: AnyCode, budget: Budget = DEFAULT_BUDGET) -> DistanceResult:
    """Minimum weight over codewords of ``code`` that are not in ``sub``.

    Returns an exact ``inf`` when ``sub`` equals ``code``.
    """
    lin, lsub = as_linear(code), as_linear(sub)
    if not lin.contains_code(lsub):
        raise NotSubcode("sub is not contained in code")
    if lsub.k == lin.k:
        return _exact(math.inf, FULL, 0)
    return _min_weight(lin, lsub, budget)


def _min_weight(lin: LinearCode, sub: Optional[LinearCode], budget: Budget) -> DistanceResult:
    q, k = lin.field.order, lin.k
    if q**k <= budget.enumeration:
        w, wit, spent = enumerate_min_weight(lin, sub)
        return _exact(w, FULL, spent, wit)
    w, wit, searched, nodes = support_search(lin, sub, budget.support_weight_max, budget.support_nodes)
    if w is not None:
        return _exact(w, SUPPORT, nodes, wit)
    return DistanceResult(BOUNDS, searched + 1, _upper_bound(lin, sub), SUPPORT, nodes)


def _upper_bound(lin: LinearCode, sub: Optional[LinearCode]) -> int:
    """Weight of the lightest generator row that qualifies, capped by Singleton."""
    rows = lin.generator
    if sub is not None:
        rows = rows[np.any(sub.syndromes(rows), axis=1)] if sub.parity_check.shape[0] else rows[:0]
    weights = np.count_nonzero(rows, axis=1)
    best = int(weights.min()) if weights.size else lin.n
    if sub is None:
        best = min(best, lin.n - lin.k + 1)
    return best


def min_distance_by(code: AnyCode, method: str, budget: Budget = DEFAULT_BUDGET,
                    sub: Optional[AnyCode] = None) -> DistanceResult:
    """Force one route (used by the cross-oracle checks)."""
    lin = as_linear(code)
    lsub = as_linear(sub) if sub is not None else None
    if method == FULL:
        w, wit, spent = enumerate_min_weight(lin, lsub)
        return _exact(w, FULL, spent, wit)
    w, wit, searched, nodes = support_search(lin, lsub, budget.support_weight_max, budget.support_nodes)
    if w is None:
        return DistanceResult(BOUNDS, searched + 1, _upper_bound(lin, lsub), SUPPORT, nodes)
    return _exact(w, SUPPORT, nodes, wit)
