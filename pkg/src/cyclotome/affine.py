"""Affine invariance of extended cyclic codes of length p^m.

The coordinates of an extended code of length p^m are labelled by GF(p^m): the
prepended position carries 0 and cyclic position i carries beta**i (here beta is
the canonical primitive element, since n = p^m - 1).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import FIELD_CAP
from .cyclic import DefiningSet, ExtendedCode, code_from_defining_set, dual_defining_set, extend
from .cyclotomic import cyclotomic_coset, precedes
from .errors import InvalidParameters, LengthMismatch, SizeBudgetExceeded
from .field import make_field, primitive_element


def extended_defining_set(t: DefiningSet) -> set[int]:
    """Defining set of the extension inside [0, n].

    0 always belongs (codewords of the extension sum to zero); a cyclic code that
    vanishes at beta**0 = 1 contributes the exponent n = p^m - 1 instead of 0.
    """
    n = t.n
    out = {0}
    out.update(s for s in t.elements if s)
    if 0 in t:
        out.add(n)
    return out


def is_affine_invariant(t: DefiningSet, p: int, m: int) -> bool:
    """Descending closure of the extended defining set under the p-adic order."""
    n = p**m - 1
    if t.n != n:
        raise LengthMismatch(f"defining set has n={t.n}, expected {n}")
    ext = extended_defining_set(t)
    for top in ext:
        for s in range(n + 1):
            if s not in ext and precedes(s, top, p, m):
                return False
    return True


def agl_generators(p: int, m: int, cap: int = FIELD_CAP) -> tuple[list[int], list[int]]:
    """Coordinate permutations of X -> alpha*X and X -> X + 1 on the extended positions.

    Each list maps old position to new position.
    """
    if p**m > cap:
        raise SizeBudgetExceeded(f"{p}^{m} exceeds oracle cap {cap}")
    big = make_field(p, m)
    alpha = primitive_element(big)
    n = p**m - 1
    labels = [big.zero]
    y = big.one
    for _ in range(n):
        labels.append(y)
        y = y * alpha
    position = {lab.coeffs: i for i, lab in enumerate(labels)}
    scale = [0] + [(i % n) + 1 for i in range(1, n + 1)]
    one = big.one
    translate = [position[(lab + one).coeffs] for lab in labels]
    return scale, translate


def is_affine_invariant_oracle(code: ExtendedCode, p: int, m: int, cap: int = FIELD_CAP) -> bool:
    """Brute-force check that both AGL(1, p^m) generators preserve the code."""
    if code.n != p**m:
        raise LengthMismatch(f"code length {code.n} is not {p}^{m}")
    lin = code.linear
    if lin.k == 0 or lin.k == lin.n:
        return True
    scale, translate = agl_generators(p, m, cap)
    for perm in (scale, translate):
        moved = np.zeros_like(lin.generator)
        moved[:, perm] = lin.generator
        if not lin.contains_vector(moved):
            return False
    return True


@dataclass(frozen=True)
class AffineClassification:
    p: int
    r: int
    m: int
    j: int
    t: DefiningSet
    affine_invariant: bool
    dual_contained: bool

    @property
    def q(self) -> int:
        return self.p**self.r

    @property
    def n(self) -> int:
        return self.p**self.m - 1

    def to_dict(self) -> dict:
        return {"p": self.p, "r": self.r, "m": self.m, "q": self.q, "n": self.n,
                "length": self.n + 1, "j": self.j, "defining_set": list(self.t.elements),
                "affine_invariant": self.affine_invariant, "dual_contained": self.dual_contained}


def _check_params(p: int, r: int, m: int) -> None:
    if r < 1 or m < 1 or m % r:
        raise InvalidParameters(f"need r | m, got r={r}, m={m}")
    make_field(p)  # primality


def maximal_defining_set(p: int, r: int, m: int, j: int) -> DefiningSet:
    """T = Cl(p^j) for the q = p^r cyclotomic cosets mod p^m - 1."""
    _check_params(p, r, m)
    n = p**m - 1
    q = p**r
    return DefiningSet(n, make_field(p, r), cyclotomic_coset(p**j % n, q, n))


def maximal_affine_invariant_codes(p: int, r: int, m: int) -> list[AffineClassification]:
    _check_params(p, r, m)
    records = []
    seen = set()
    for j in range(r):
        t = maximal_defining_set(p, r, m, j)
        if t.elements in seen:
            continue
        seen.add(t.elements)
        records.append(AffineClassification(
            p, r, m, j, t, is_affine_invariant(t, p, m), dual_contained_maximal(p, r, m, j)))
    return records


def dual_contained_maximal(p: int, r: int, m: int, j: int) -> bool:
    """s in T implies p^m - 1 - s not in T, for T = Cl(p^j)."""
    t = maximal_defining_set(p, r, m, j)
    n = t.n
    return all((n - s) % n not in t for s in t.elements)


def dual_containment_hypothesis(p: int, r: int, m: int) -> bool:
    return p > 3 or m > 2 or r != 1


def dual_contained_by_matrix(p: int, r: int, m: int, j: int) -> bool:
    """Matrix route: every parity-check row of the extended code is a codeword."""
    code = extend(code_from_defining_set(maximal_defining_set(p, r, m, j)))
    lin = code.linear
    h = lin.parity_check
    return bool(lin.k) and not lin.syndromes(h).any()


def dual_defining_set_contains(p: int, r: int, m: int, j: int) -> bool:
    t = maximal_defining_set(p, r, m, j)
    return set(t.elements) <= set(dual_defining_set(t).elements)
