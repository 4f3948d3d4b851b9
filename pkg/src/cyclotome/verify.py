"""Property sweeps behind ``cyclotome verify``.

Each check returns ``(ok, detail)``; suites are ordered lists of named checks.
Sweep sizes are kept at desk scale so ``verify all`` finishes in well under a minute
on the smaller grids and a few minutes overall.
"""

from __future__ import annotations

import itertools
import math
from typing import Callable

from . import affine, cyclic, cyclotomic
from .config import Budget
from .errors import SearchBudgetExceeded
from .cyclic import DefiningSet, code_from_defining_set, extend
from .distance import FULL, SUPPORT, min_distance, min_distance_by
from .quantum import (affine_quantum_family, css_construct, duadic_codes, duadic_quantum,
                      singleton_check)

Check = Callable[[], tuple[bool, str]]

AFFINE_GRID = [(p, r, m) for p in (2, 3, 5, 7) for r in (1, 2) for m in range(1, 7)
               if m % r == 0 and p**m <= 32]
DUAL_GRID = [(p, r, m) for p in (2, 3, 5, 7) for r in (1, 2) for m in range(1, 7)
             if m % r == 0 and p**m <= 64]
COUNT_GRID = [(p, r, m) for p in (2, 3, 5, 7) for r in (1, 2, 3) for m in range(1, 13)
              if m % r == 0 and p**m <= 2**12]
DUAL_EXCEPTIONS = {(2, 1, 1), (3, 1, 1), (2, 1, 2)}  # as (p, r, m)
ORDER_QS = (2, 3, 4, 5, 7, 8, 9)


def _fail(items: list, limit: int = 5) -> str:
    return f"{len(items)} counterexample(s): {items[:limit]}"


def _result(bad: list, what: str) -> tuple[bool, str]:
    return (not bad, what if not bad else _fail(bad))


def coset_unions(q: int, n: int, limit: int = 2**12) -> list[tuple[int, ...]]:
    """Unions of q-cosets mod n: all of them when few enough, else singletons,
    pairs, complements and the two extremes."""
    cos = cyclotomic.all_cosets(q, n).cosets
    if 2 ** len(cos) <= limit:
        sizes = range(len(cos) + 1)
    else:
        sizes = sorted({0, 1, 2, len(cos) - 1, len(cos)})
    out = []
    for k in sizes:
        for combo in itertools.combinations(cos, k):
            out.append(tuple(sorted(s for c in combo for s in c)))
    return out


# -- orders -----------------------------------------------------------------------

def check_order_halving(n_max: int = 1000) -> tuple[bool, str]:
    bad = []
    for q in ORDER_QS:
        for n in range(2, n_max + 1):
            if math.gcd(q, n) != 1:
                continue
            t, t2 = cyclotomic.mult_order(q, n), cyclotomic.mult_order(q * q, n)
            if (t % 2 and t2 != t) or (t % 2 == 0 and t2 != t // 2):
                bad.append((n, q, t, t2))
    return _result(bad, f"ord_n(q^2) from ord_n(q), n <= {n_max}")


def _primes_3_mod_4(n: int) -> bool:
    return n > 1 and all(p % 4 == 3 for p, _ in cyclotomic.factorize(n))


def check_odd_order(n_max: int = 1000) -> tuple[bool, str]:
    bad = [(n, q) for q in ORDER_QS for n in range(3, n_max + 1)
           if math.gcd(q, n) == 1 and _primes_3_mod_4(n) and cyclotomic.mult_order(q * q, n) % 2 == 0]
    return _result(bad, f"ord_n(q^2) odd when all primes are 3 mod 4, n <= {n_max}")


def check_partial_order(cap: int = 256) -> tuple[bool, str]:
    bad = []
    for p in (2, 3, 5, 7):
        m = 1
        while p**m <= cap:
            N = p**m
            rel = [[cyclotomic.precedes(s, t, p, m) for t in range(N)] for s in range(N)]
            for a in range(N):
                if not rel[a][a]:
                    bad.append(("reflexive", p, m, a))
                for b in range(N):
                    if a != b and rel[a][b] and rel[b][a]:
                        bad.append(("antisymmetric", p, m, a, b))
            if N <= 64:
                for a, b, c in itertools.product(range(N), repeat=3):
                    if rel[a][b] and rel[b][c] and not rel[a][c]:
                        bad.append(("transitive", p, m, a, b, c))
            m += 1
    return _result(bad, f"p-adic order is a partial order, p^m <= {cap}")


# -- duadic -----------------------------------------------------------------------

def check_duadic_existence(n_max: int = 49, qs=(2, 3, 4, 5, 7, 8, 9)) -> tuple[bool, str]:
    bad = []
    for q in qs:
        for n in range(3, n_max + 1, 2):
            if math.gcd(n, q) != 1:
                continue
            found = bool(cyclotomic.find_splittings(n, q))
            if found != cyclotomic.is_square_mod(q, n):
                bad.append((n, q, found))
    return _result(bad, f"splittings exist iff q is a square mod n, odd n <= {n_max}")


def mu_q_splitting_counterexamples(n_max: int = 255, qs=(2, 3)) -> list[tuple]:
    """(n, q, reason) for every odd-order instance where mu_{-q} and mu_{-1} disagree.

    Splitting sets are compared through the coset permutations the two multipliers
    induce, and also element by element when the sets are small enough to list.
    """
    bad = []
    for q in qs:
        Q = q * q
        for n in range(3, n_max + 1, 2):
            if math.gcd(n, q) != 1 or cyclotomic.mult_order(Q, n) % 2 == 0:
                continue
            part = cyclotomic.all_cosets(Q, n)
            if not all(cyclotomic.apply_multiplier(c, q, n) == frozenset(c) for c in part.cosets):
                bad.append((n, q, "mu_q moves a q^2-coset"))
                continue
            if not (cyclotomic.splits_by(Q, n, -1) and cyclotomic.splits_by(Q, n, -q)):
                bad.append((n, q, "a multiplier gives no splitting"))
                continue
            if cyclotomic.coset_permutation(Q, n, -1) != cyclotomic.coset_permutation(Q, n, -q):
                bad.append((n, q, "splitting sets differ"))
                continue
            try:
                m1 = cyclotomic.find_splittings(n, Q, -1, n_cap=n_max)
                mq = cyclotomic.find_splittings(n, Q, -q, n_cap=n_max)
            except SearchBudgetExceeded:
                continue
            if cyclotomic.splitting_pairs(m1) != cyclotomic.splitting_pairs(mq):
                bad.append((n, q, "splitting sets differ"))
    return bad


def check_mu_q_splitting(n_max: int = 255) -> tuple[bool, str]:
    return _result(mu_q_splitting_counterexamples(n_max), f"mu_-q and mu_-1 give the same splittings, n <= {n_max}")


def check_duadic_quantum(ns=((7, 2), (11, 3), (23, 2))) -> tuple[bool, str]:
    bad = []
    for n, q in ns:
        rec = duadic_quantum(n, q)
        d = rec.distance
        if not (d.exact and rec.k == 1 and d.d_lo**2 - d.d_lo + 1 >= n and d.d_lo**2 >= n
                and singleton_check(rec)):
            bad.append((n, q, rec.label()))
    return _result(bad, "[[n,1,d]] with d^2 - d + 1 >= n")


def check_square_root_pairs(ns=((7, 2), (11, 3), (23, 2), (7, 4), (17, 2))) -> tuple[bool, str]:
    """Odd-like pairs share their minimum distance and meet both square-root bounds."""
    bad = []
    for n, q in ns:
        for sp in cyclotomic.find_splittings(n, q):
            codes = duadic_codes(n, q, sp.s1, sp.s2)
            d1, d2 = min_distance(codes.odd1).d, min_distance(codes.odd2).d
            ok = d1 == d2 and d1 * d1 >= n
            if sp.a == n - 1:
                ok = ok and d1 * d1 - d1 + 1 >= n
            if not ok:
                bad.append((n, q, sp.a, d1, d2))
    return _result(bad, "odd-like duadic distances equal and above sqrt(n)")


# -- cyclic / css ---------------------------------------------------------------

def _dual_oracle_cases(fields=(2, 3, 4, 9), n_max: int = 17):
    for q in fields:
        for n in range(2, n_max + 1):
            if math.gcd(n, q) != 1:
                continue
            for elems in coset_unions(q, n, limit=2**6):
                yield q, n, elems


def check_euclidean_dual(n_max: int = 17) -> tuple[bool, str]:
    bad = []
    for q, n, elems in _dual_oracle_cases(n_max=n_max):
        t = DefiningSet.of(n, q, elems)
        a = code_from_defining_set(t).linear
        b = code_from_defining_set(cyclic.dual_defining_set(t)).linear
        g = a.gf
        orth = a.k == 0 or b.k == 0 or not g.matmul(a.generator, b.generator.T).any()
        if not orth or a.k + b.k != n:
            bad.append((q, n, elems))
    return _result(bad, f"Euclidean dual defining set matches G G'^T = 0, n <= {n_max}")


def check_hermitian_dual(n_max: int = 17) -> tuple[bool, str]:
    bad = []
    for q, n, elems in _dual_oracle_cases(fields=(4, 9), n_max=n_max):
        t = DefiningSet.of(n, q, elems)
        a = code_from_defining_set(t).linear
        b = code_from_defining_set(cyclic.hermitian_dual_defining_set(t)).linear
        g = a.gf
        orth = a.k == 0 or b.k == 0 or not g.matmul(a.generator, g.conjugate(b.generator).T).any()
        if not orth or a.k + b.k != n:
            bad.append((q, n, elems))
    return _result(bad, f"Hermitian dual defining set matches <u, v^q> = 0, n <= {n_max}")


def check_distance_routes(n_max: int = 15) -> tuple[bool, str]:
    bad = []
    budget = Budget(support_weight_max=16, support_nodes=10**6)
    for q in (2, 3, 4):
        for n in range(3, n_max + 1):
            if math.gcd(n, q) != 1:
                continue
            for elems in coset_unions(q, n, limit=2**4):
                code = code_from_defining_set(DefiningSet.of(n, q, elems))
                if code.k == 0 or q**code.k > 2**14:
                    continue
                for c in (code, extend(code)):
                    a = min_distance_by(c, FULL)
                    b = min_distance_by(c, SUPPORT, budget)
                    if not b.exact or a.d != b.d:
                        bad.append((q, n, elems, a.d_lo, b.d_lo))
    return _result(bad, "full enumeration and support search agree")


def check_css_commutation() -> tuple[bool, str]:
    bad = []
    cases = [extend(code_from_defining_set(affine.maximal_defining_set(p, r, m, 0)))
             for p, r, m in [(2, 1, 3), (2, 1, 4), (3, 1, 2), (5, 1, 2), (2, 2, 4)]]
    cases.append(cyclic.cyclic_code(7, 2, [1, 2, 4]))
    cases.append(cyclic.cyclic_code(15, 2, [1, 2, 4, 8]))
    for c in cases:
        rec = css_construct(c, c)
        lin = cyclic.as_linear(c)
        g = lin.gf
        if g.matmul(lin.dual().generator, lin.parity_check.T).any() or not singleton_check(rec):
            bad.append(rec.label())
    return _result(bad, "dual(C2) rows annihilated by C1 parity checks")


def check_affine_quantum_arithmetic() -> tuple[bool, str]:
    bad = []
    quick = Budget(support_weight_max=4, support_nodes=60_000)
    for p, r, m in DUAL_GRID:
        if not affine.dual_containment_hypothesis(p, r, m):
            continue
        rec = affine_quantum_family(p, r, m, quick)
        if rec.n != p**m or rec.k != p**m - 2 - 2 * (m // r) or not singleton_check(rec):
            bad.append((p, r, m, rec.label()))
    return _result(bad, "n = p^m, k = p^m - 2 - 2m/r on the grid p^m <= 64")


def check_affine_purity() -> tuple[bool, str]:
    rec = affine_quantum_family(5, 1, 2)
    code = extend(code_from_defining_set(affine.maximal_defining_set(5, 1, 2, 0)))
    d_a = min_distance(code)
    d_dual = min_distance(code.linear.dual())
    ok = (rec.distance.exact and d_a.exact and rec.distance.d == d_a.d and d_dual.d > d_a.d)
    return ok, f"d_Q = d_A = {d_a.d_lo}, dual distance {d_dual.d_lo}"


# -- affine -----------------------------------------------------------------------

def check_criterion_oracle(grid=AFFINE_GRID) -> tuple[bool, str]:
    bad = []
    for p, r, m in grid:
        n, q = p**m - 1, p**r
        for elems in coset_unions(q, n):
            t = DefiningSet.of(n, q, elems)
            a = affine.is_affine_invariant(t, p, m)
            b = affine.is_affine_invariant_oracle(extend(code_from_defining_set(t)), p, m)
            if a != b:
                bad.append((p, r, m, elems, a, b))
    return _result(bad, "p-adic criterion matches AGL(1, p^m) invariance")


def maximal_invariance_mismatches(grid=AFFINE_GRID) -> list[tuple]:
    bad = []
    for p, r, m in grid:
        n, q = p**m - 1, p**r
        powers = {tuple(cyclotomic.cyclotomic_coset(p**j % n, q, n)) for j in range(m)}
        for coset in cyclotomic.all_cosets(q, n).cosets:
            t = DefiningSet.of(n, q, coset)
            inv = affine.is_affine_invariant_oracle(extend(code_from_defining_set(t)), p, m)
            if inv != (coset in powers):
                bad.append((p, r, m, coset, inv))
    return bad


def check_maximal_invariance(grid=AFFINE_GRID) -> tuple[bool, str]:
    return _result(maximal_invariance_mismatches(grid), "maximal code affine-invariant iff T = Cl(p^j)")


def check_maximal_count(grid=COUNT_GRID) -> tuple[bool, str]:
    bad = [(p, r, m, len(recs)) for p, r, m in grid
           for recs in [affine.maximal_affine_invariant_codes(p, r, m)]
           if len(recs) != r or not all(x.affine_invariant for x in recs)
           or any(len(x.t) != m // r for x in recs)]
    return _result(bad, "exactly r maximal affine-invariant codes, each coset of size m/r")


def dual_containment_mismatches(grid=DUAL_GRID) -> list[tuple]:
    bad = []
    for p, r, m in grid:
        expected = (p, r, m) not in DUAL_EXCEPTIONS
        for j in range(r):
            pred = affine.dual_contained_maximal(p, r, m, j)
            mat = affine.dual_contained_by_matrix(p, r, m, j)
            sets = affine.dual_defining_set_contains(p, r, m, j)
            if not (pred == mat == sets == expected):
                bad.append((p, r, m, j, pred, mat, sets))
            if affine.dual_containment_hypothesis(p, r, m) and not pred:
                bad.append((p, r, m, j, "hypothesis holds but containment fails"))
    return bad


def check_dual_containment(grid=DUAL_GRID) -> tuple[bool, str]:
    return _result(dual_containment_mismatches(grid), "dual containment by predicate, defining sets and matrices")


SUITES: dict[str, list[tuple[str, Check]]] = {
    "orders": [
        ("order_halving", check_order_halving),
        ("odd_order", check_odd_order),
        ("precedes_partial_order", check_partial_order),
    ],
    "affine": [
        ("criterion_vs_agl_oracle", check_criterion_oracle),
        ("maximal_invariance", check_maximal_invariance),
        ("maximal_count", check_maximal_count),
        ("dual_containment", check_dual_containment),
    ],
    "duadic": [
        ("duadic_existence", check_duadic_existence),
        ("mu_q_same_splitting", check_mu_q_splitting),
        ("square_root_pairs", check_square_root_pairs),
        ("hermitian_duadic_records", check_duadic_quantum),
    ],
    "css": [
        ("euclidean_dual_oracle", check_euclidean_dual),
        ("hermitian_dual_oracle", check_hermitian_dual),
        ("distance_route_agreement", check_distance_routes),
        ("css_commutation", check_css_commutation),
        ("affine_quantum_arithmetic", check_affine_quantum_arithmetic),
        ("affine_purity", check_affine_purity),
    ],
}


def run_suite(name: str) -> list[tuple[str, bool, str]]:
    names = list(SUITES) if name == "all" else [name]
    out = []
    for suite in names:
        for label, check in SUITES[suite]:
            ok, detail = check()
            out.append((f"{suite}.{label}", ok, detail))
    return out
