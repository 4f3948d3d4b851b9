"""Quantum codes from classical ingredients.

* CSS: from C1, C2 with dual(C2) inside C1, an [[n, k1 + k2 - n, d]] code where d is
  the least weight in (C1 - dual(C2)) or (C2 - dual(C1)).
* Hermitian: from C over GF(q^2) inside its Hermitian dual, an [[n, n - 2k, d]]_q
  code with d the least weight in (hdual(C) - C).
* The affine-invariant family (maximal extended cyclic codes, CSS with C1 = C2).
* The duadic families over GF(q^2), split by mu_{-q}.

Distances come from :mod:`cyclotome.distance`; ``pure_to`` is the minimum
distance of the ingredient code(s) and a record is degenerate when that is
strictly below the quantum distance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from typing import Any, Optional

import numpy as np

from .affine import (dual_contained_maximal, dual_containment_hypothesis, maximal_defining_set,
                     _check_params)
from .config import DEFAULT_BUDGET, Budget
from .cyclic import (AnyCode, CyclicCode, DefiningSet, ExtendedCode, LinearCode, as_linear,
                     code_from_defining_set, dual_defining_set, extend, field_of_order,
                     hermitian_dual_defining_set)
from .cyclotomic import factorize, find_splittings, mult_order, splitting_pairs, z_exponent
from .distance import BOUNDS, EXACT, DistanceResult, min_distance, min_weight_outside
from .errors import (DualNotContained, FieldMismatch, InvalidParameters, LemmaFiveExcluded,
                     LengthMismatch, NoSplitting, NotCoprime, NotHermitianSelfOrthogonal,
                     NotSquareField, OrderNotOdd, PreconditionFailed, SearchBudgetExceeded,
                     SizeBudgetExceeded)

CSS = "css_generic"
HERMITIAN = "hermitian_generic"
AFFINE = "affine_theorem6"
DUADIC = "duadic_theorem14"
DEGENERATE = "duadic_theorem15"

ANALYTIC = "analytic_bound"


@dataclass
class QuantumCodeRecord:
    n: int
    k: int
    q: int
    distance: DistanceResult
    pure_to: Optional[int]
    pure_to_kind: Optional[str]  # "exact" or "upper"
    degenerate: Optional[bool]
    family: str
    provenance: dict = dc_field(default_factory=dict)

    @property
    def d_lo(self) -> float:
        return self.distance.d_lo

    @property
    def d_exact(self) -> Optional[float]:
        return self.distance.d_lo if self.distance.exact else None

    def label(self) -> str:
        d = self.d_exact
        if d is None:
            d = f"{_fmt(self.distance.d_lo)}..{_fmt(self.distance.d_hi)}"
        else:
            d = _fmt(d)
        return f"[[{self.n},{self.k},{d}]]_{self.q}"

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "q": self.q, "d": self.distance.to_dict(),
                "pure_to": self.pure_to, "pure_to_kind": self.pure_to_kind,
                "degenerate": self.degenerate, "family": self.family,
                "provenance": _jsonable(self.provenance)}


def _fmt(x) -> str:
    if x is None:
        return "?"
    return "inf" if x == math.inf else str(int(x))


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [_jsonable(v) for v in obj]
        return sorted(items) if isinstance(obj, (set, frozenset)) else items
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, float) and obj == math.inf:
        return "inf"
    if hasattr(obj, "to_dict"):
        return _jsonable(obj.to_dict())
    return obj


def singleton_check(rec: QuantumCodeRecord) -> bool:
    """k <= n - 2d + 2, with the exact distance or else the upper end of the bounds."""
    dist = rec.distance
    d = dist.d_lo if dist.exact or dist.d_hi is None else dist.d_hi
    if d == math.inf:
        return True
    return rec.k <= rec.n - 2 * d + 2


def singleton_cap(n: int, k: int) -> int:
    return (n - k) // 2 + 1


def sqrt_bound(n: int) -> int:
    """Smallest d with d^2 - d + 1 >= n."""
    d = 1
    while d * d - d + 1 < n:
        d += 1
    return d


# -- helpers -------------------------------------------------------------------

def _combine(parts: list[DistanceResult], cap: int) -> DistanceResult:
    lo = min(p.d_lo for p in parts)
    his = [p.d_hi for p in parts if p.d_hi is not None]
    hi = min(his) if his else None
    if hi is not None and hi != math.inf:
        hi = min(hi, cap)
    spent = sum(p.budget_spent for p in parts)
    for p in parts:
        if p.exact and p.d_lo == lo:
            return DistanceResult(EXACT, lo, lo, p.method, spent, p.witness)
    # lo == hi without a witness stays a bound
    return DistanceResult(BOUNDS, lo, hi, parts[0].method, spent)


def _pure(parts: list[DistanceResult]) -> tuple[Optional[int], Optional[str]]:
    """Least ingredient distance: exact when every part is exact, else an upper bound."""
    if all(p.exact for p in parts):
        return int(min(p.d_lo for p in parts)), "exact"
    his = [p.d_hi for p in parts if p.d_hi is not None and p.d_hi != math.inf]
    exact_vals = [p.d_lo for p in parts if p.exact]
    cands = his + exact_vals
    return (int(min(cands)), "upper") if cands else (None, None)


def _degenerate(dist: DistanceResult, pure_to: Optional[int], kind: Optional[str]) -> Optional[bool]:
    if pure_to is None:
        return None
    if pure_to < dist.d_lo:
        return True
    if kind == "exact" and dist.exact:
        return pure_to < dist.d_lo
    return None


def _stabilizer_distance(codes: list[LinearCode], budget: Budget) -> DistanceResult:
    parts = [min_distance(c, budget) for c in codes if c.k]
    return _combine(parts, math.inf) if parts else DistanceResult(EXACT, math.inf, math.inf, "full_enumeration", 0)


def _cyclic_t(code: AnyCode) -> Optional[DefiningSet]:
    return code.t if isinstance(code, CyclicCode) else None


# -- constructions ---------------------------------------------------------------

def css_construct(c1: AnyCode, c2: AnyCode, budget: Budget = DEFAULT_BUDGET,
                  family: str = CSS, provenance: Optional[dict] = None) -> QuantumCodeRecord:
    l1, l2 = as_linear(c1), as_linear(c2)
    if l1.n != l2.n:
        raise LengthMismatch(f"lengths {l1.n} and {l2.n} differ")
    if l1.field != l2.field:
        raise FieldMismatch(f"{l1.field!r} vs {l2.field!r}")
    d2, d1 = l2.dual(), l1.dual()
    contained = l1.contains_code(d2)
    t1, t2 = _cyclic_t(c1), _cyclic_t(c2)
    if t1 is not None and t2 is not None:
        by_set = set(t1.elements) <= set(dual_defining_set(t2).elements)
        if by_set != contained:
            raise AssertionError("defining-set and matrix containment disagree")
    if not contained:
        raise DualNotContained("dual(C2) is not contained in C1")
    n = l1.n
    k = l1.k + l2.k - n
    same = l1 == l2
    outs = [min_weight_outside(l1, d2, budget)]
    if not same:
        outs.append(min_weight_outside(l2, d1, budget))
    ingredients = [min_distance(l1, budget)] if l1.k else []
    if l2.k and not same:
        ingredients.append(min_distance(l2, budget))
    pure_to, pure_kind = _pure(ingredients) if ingredients else (None, None)
    dist = _combine(outs, singleton_cap(n, k))
    stabilizer_only = dist.d_lo == math.inf
    if stabilizer_only:
        # k = 0: report the pure distance min(d1, d2) as a lower bound
        base = _combine(ingredients, math.inf)
        dist = DistanceResult(BOUNDS, base.d_lo, singleton_cap(n, k), base.method,
                              base.budget_spent, None)
        degenerate: Optional[bool] = False
    else:
        degenerate = _degenerate(dist, pure_to, pure_kind)
    prov = {"theorem": "css", "ingredients": [_describe(c1), _describe(c2)],
            "stabilizer_only": stabilizer_only}
    prov.update(provenance or {})
    rec = QuantumCodeRecord(n, k, l1.field.order, dist, pure_to, pure_kind, degenerate, family, prov)
    _gate(rec)
    return rec


def _describe(code: AnyCode) -> dict:
    if isinstance(code, (CyclicCode, ExtendedCode)):
        return code.to_dict()
    return {"n": code.n, "k": code.k, "q_char": code.field.p, "q_deg": code.field.e, "name": code.name}


def _gate(rec: QuantumCodeRecord) -> None:
    if not 0 <= rec.k <= rec.n:
        raise AssertionError(f"{rec.label()} has k outside [0, n]")
    if not singleton_check(rec):
        raise AssertionError(f"{rec.label()} violates the quantum Singleton bound")


def is_hermitian_self_orthogonal(code: AnyCode) -> bool:
    lin = as_linear(code)
    g = lin.gf
    if g.conj is None:
        raise NotSquareField(f"{lin.field!r} is not GF(q^2)")
    if lin.k == 0:
        return True
    return not g.matmul(lin.generator, g.conjugate(lin.generator).T).any()


def hermitian_construct(c: AnyCode, budget: Budget = DEFAULT_BUDGET, family: str = HERMITIAN,
                        provenance: Optional[dict] = None) -> QuantumCodeRecord:
    lin = as_linear(c)
    if lin.gf.conj is None:
        raise NotSquareField(f"{lin.field!r} is not GF(q^2)")
    ok = is_hermitian_self_orthogonal(lin)
    t = _cyclic_t(c)
    if t is not None:
        by_set = set(hermitian_dual_defining_set(t).elements) <= set(t.elements)
        if by_set != ok:
            raise AssertionError("defining-set and matrix Hermitian containment disagree")
    if not ok:
        raise NotHermitianSelfOrthogonal("C is not contained in its Hermitian dual")
    n = lin.n
    k = n - 2 * lin.k
    q = math.isqrt(lin.field.order)
    hd = lin.hermitian_dual()
    dist = _combine([min_weight_outside(hd, lin, budget)], singleton_cap(n, k))
    pure_to, pure_kind = _pure([min_distance(hd, budget)])
    stabilizer_only = dist.d_lo == math.inf
    if stabilizer_only:
        base = min_distance(lin, budget)
        dist = DistanceResult(BOUNDS, base.d_lo, singleton_cap(n, k), base.method, base.budget_spent)
        degenerate: Optional[bool] = False
    else:
        degenerate = _degenerate(dist, pure_to, pure_kind)
    prov = {"theorem": "hermitian", "ingredients": [_describe(c)], "stabilizer_only": stabilizer_only}
    prov.update(provenance or {})
    rec = QuantumCodeRecord(n, k, q, dist, pure_to, pure_kind, degenerate, family, prov)
    _gate(rec)
    return rec


def affine_quantum_family(p: int, r: int, m: int, budget: Budget = DEFAULT_BUDGET,
                          j: int = 0) -> QuantumCodeRecord:
    """CSS code from the j-th (default j = 0) maximal affine-invariant extended code of length p^m."""
    _check_params(p, r, m)
    if not dual_containment_hypothesis(p, r, m):
        raise LemmaFiveExcluded(f"(p, r, m) = ({p}, {r}, {m}) needs p > 3 or m > 2 or r != 1")
    size = m // r
    k_expected = p**m - 2 - 2 * size
    if k_expected < 0:
        raise InvalidParameters(f"k = {k_expected} < 0")
    if not 0 <= j < r:
        raise InvalidParameters(f"j = {j} outside [0, {r})")
    if not dual_contained_maximal(p, r, m, j):
        raise AssertionError(f"dual containment fails at ({p}, {r}, {m}, j={j})")
    code = extend(code_from_defining_set(maximal_defining_set(p, r, m, j)))
    rec = css_construct(code, code, budget, family=AFFINE,
                        provenance={"theorem": "affine_css", "p": p, "r": r, "m": m, "j": j})
    if rec.k != k_expected:
        raise AssertionError(f"k = {rec.k}, expected {k_expected}")
    upper = size + 2
    dist = rec.distance
    if dist.exact and dist.d_lo > upper:
        raise AssertionError(f"d_Q = {dist.d_lo} exceeds {upper}")
    if not dist.exact and dist.d_hi is not None and dist.d_hi > upper:
        rec.distance = DistanceResult(BOUNDS, dist.d_lo, upper, dist.method, dist.budget_spent)
    rec.provenance["d_upper"] = upper
    # purity of the prime-field case: d_Q equals the classical distance d_A
    if r == 1 and not rec.provenance["stabilizer_only"]:
        confirmed = (rec.pure_to_kind == "exact" and rec.distance.exact and rec.pure_to == rec.distance.d_lo)
        rec.provenance["pure_confirmed"] = confirmed if rec.distance.exact and rec.pure_to_kind == "exact" else None
    rec.provenance["d_A"] = rec.pure_to
    return rec


# -- duadic families -------------------------------------------------------------

@dataclass(frozen=True)
class DuadicCodes:
    even1: CyclicCode
    even2: CyclicCode
    odd1: CyclicCode
    odd2: CyclicCode


def duadic_codes(n: int, field_q: int, s1, s2) -> DuadicCodes:
    mk = lambda elems: code_from_defining_set(DefiningSet.of(n, field_q, elems))
    return DuadicCodes(mk([0, *s1]), mk([0, *s2]), mk(s1), mk(s2))


def _check_duadic_pre(n: int, q: int) -> None:
    if n % 2 == 0 or n < 3:
        raise InvalidParameters(f"n = {n} must be odd and >= 3")
    field_of_order(q)
    if math.gcd(n, q) != 1:
        raise NotCoprime(f"gcd({n}, {q}) != 1")


def duadic_quantum(n: int, q: int, budget: Budget = DEFAULT_BUDGET, family: str = DUADIC
                   ) -> QuantumCodeRecord:
    """[[n, 1, d]]_q from the even-like duadic code C1 over GF(q^2) split by mu_{-q}."""
    _check_duadic_pre(n, q)
    Q = q * q
    order = mult_order(Q, n)
    if order % 2 == 0:
        raise OrderNotOdd(f"ord_{n}({Q}) = {order} is even")
    splits = find_splittings(n, Q, -q, n_cap=budget.n_cap)
    if not splits:
        raise NoSplitting(f"mu_-{q} fixes a {Q}-cyclotomic coset mod {n} "
                          f"(ord_{n}({q}) = {mult_order(q, n)}); no splitting by mu_-{q} exists")
    sp = splits[0]
    minus_one = find_splittings(n, Q, -1, n_cap=budget.n_cap)
    codes = duadic_codes(n, Q, sp.s1, sp.s2)
    if hermitian_dual_defining_set(codes.even1.t).elements != codes.odd1.t.elements:
        raise AssertionError("Hermitian dual of C1 is not D1")
    rec = hermitian_construct(codes.even1, budget, family=family, provenance={
        "theorem": "duadic_hermitian", "splitting": sp.to_dict(),
        "same_as_mu_minus_one": splitting_pairs(splits) == splitting_pairs(minus_one),
    })
    bound = sqrt_bound(n)
    dist = rec.distance
    if dist.exact:
        rec.provenance["sqrt_bound_holds"] = dist.d_lo * dist.d_lo - dist.d_lo + 1 >= n
        if not rec.provenance["sqrt_bound_holds"]:
            raise AssertionError(f"{rec.label()} violates d^2 - d + 1 >= n")
    elif dist.d_lo < bound:
        rec.distance = DistanceResult(BOUNDS, bound, dist.d_hi, dist.method, dist.budget_spent)
        rec.provenance["d_lo_source"] = "square_root_bound"
    return rec


def degenerate_preconditions(n: int, q: int) -> tuple[list[tuple[int, int, int, int]], int]:
    """Per prime (p_i, m_i, t_i, z_i) and min p_i^z_i, or PreconditionFailed."""
    if n % 2 == 0 or n < 3:
        raise PreconditionFailed("odd_length", f"n = {n} must be odd")
    if math.gcd(n, q) != 1:
        raise PreconditionFailed("coprimality", f"gcd({n}, {q}) != 1")
    rows = []
    for p_i, m_i in factorize(n):
        if p_i % 4 != 3:
            raise PreconditionFailed("prime_congruence", f"{p_i} is not 3 mod 4")
        t_i, z_i = z_exponent(p_i, q)
        if m_i <= 2 * z_i:
            raise PreconditionFailed("exponent_bound", f"m = {m_i} <= 2z = {2 * z_i} for p = {p_i}")
        rows.append((p_i, m_i, t_i, z_i))
    return rows, min(p**z for p, _, _, z in rows)


def degenerate_duadic_family(n: int, q: int, budget: Budget = DEFAULT_BUDGET) -> QuantumCodeRecord:
    rows, cap = degenerate_preconditions(n, q)
    bound = sqrt_bound(n)
    prov = {"theorem": "duadic_degenerate", "primes": [
        {"p": p, "m": m, "t": t, "z": z} for p, m, t, z in rows], "pure_to_bound": cap}
    try:
        return _degenerate_by_oracle(n, q, budget, bound, cap, prov)
    except (SearchBudgetExceeded, SizeBudgetExceeded) as exc:
        prov["oracle_skipped"] = exc.clause
    # parameter record: mu_{-q} splits exactly when q generates the same subgroup as q^2
    Q = q * q
    if mult_order(Q, n) % 2 == 0:
        raise OrderNotOdd(f"ord_{n}({Q}) is even")
    if mult_order(q, n) % 2 == 0:
        raise NoSplitting(f"ord_{n}({q}) is even: mu_-{q} fixes a {Q}-coset mod {n}")
    dist = DistanceResult(BOUNDS, bound, singleton_cap(n, 1), ANALYTIC, 0)
    degenerate = True if cap < bound else None
    prov["degenerate_source"] = "bound_chain"
    rec = QuantumCodeRecord(n, 1, q, dist, cap, "upper", degenerate, DEGENERATE, prov)
    _gate(rec)
    return rec


def _degenerate_by_oracle(n, q, budget, bound, cap, prov) -> QuantumCodeRecord:
    if n > budget.n_cap:
        raise SearchBudgetExceeded(f"n = {n} above cap {budget.n_cap}")
    DefiningSet.of(n, q * q, []).splitting_field(budget.root_field_cap)
    # only weights below the square-root bound need ruling out
    search = budget.with_(support_weight_max=min(budget.support_weight_max, bound - 1))
    rec = duadic_quantum(n, q, search, family=DEGENERATE)
    rec.provenance.update(prov)
    sp = rec.provenance["splitting"]
    even = code_from_defining_set(DefiningSet.of(n, q * q, [0, *sp["s1"]]))
    witness = min_distance(even, budget.with_(support_weight_max=cap))
    if witness.exact and witness.d_lo <= cap:
        rec.provenance["even_like_witness"] = {"weight": int(witness.d_lo), "codeword": list(witness.witness)}
        rec.pure_to = min(rec.pure_to, int(witness.d_lo)) if rec.pure_to is not None else int(witness.d_lo)
        if rec.pure_to_kind is None:
            rec.pure_to_kind = "upper"
    rec.degenerate = _degenerate(rec.distance, rec.pure_to, rec.pure_to_kind)
    rec.provenance["degenerate_source"] = "witnesses"
    _gate(rec)
    return rec
