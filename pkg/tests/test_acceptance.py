"""Acceptance suite: one test per criterion, each with its runtime limit.

Two criteria are expected to fail. Both rest on the claim that for odd
ord_n(q^2) the multiplier mu_{-q} splits n over GF(q^2) the same way mu_{-1}
does. That claim is false whenever ord_n(q) is even. See the decisions ledger
for the counterexamples and the analysis.
"""

from __future__ import annotations

import math
import time
from contextlib import contextmanager

import numpy as np

from cyclotome import affine, cyclotomic, quantum, verify
from cyclotome.config import Budget
from cyclotome.cyclic import cyclic_code, extend
from cyclotome.distance import FULL, min_distance, min_weight_outside
from cyclotome.errors import CyclotomeError


@contextmanager
def within(seconds: float):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.1f} s, limit {seconds} s"


GRID_1 = [(p, r, m) for p in (2, 3, 5, 7) for r in (1, 2) for m in range(1, 6)
          if m % r == 0 and p**m <= 32]


def test_maximal_code_invariance_equivalence():
    with within(60):
        bad = verify.maximal_invariance_mismatches(GRID_1)
    assert not bad, bad


def test_maximal_code_count_equals_r():
    with within(1):
        bad = [(p, r, m) for p, r, m in GRID_1
               if len(affine.maximal_affine_invariant_codes(p, r, m)) != r]
    assert not bad, bad


def test_dual_containment_grid_and_exceptions():
    grid = [(p, r, m) for p in (2, 3, 5, 7) for r in (1, 2) for m in range(1, 7)
            if m % r == 0 and p**m <= 64]
    exceptions = {(2, 1, 1), (3, 1, 1), (2, 1, 2)}  # as (p, r, m)
    bad = []
    with within(60):
        for p, r, m in grid:
            for j in range(r):
                pred = affine.dual_contained_maximal(p, r, m, j)
                mat = affine.dual_contained_by_matrix(p, r, m, j)
                if (p, r, m) in exceptions:
                    if pred or mat:
                        bad.append(("exception holds", p, r, m, j))
                elif affine.dual_containment_hypothesis(p, r, m) and not (pred and mat):
                    bad.append(("fails", p, r, m, j, pred, mat))
    assert not bad, bad


def test_affine_quantum_25_19():
    with within(120):
        rec = quantum.affine_quantum_family(5, 1, 2)
    assert (rec.n, rec.k, rec.q) == (25, 19, 5)
    assert rec.k == 5**2 - 2 - 2 * 2
    assert rec.distance.exact and 3 <= rec.distance.d <= 4
    assert rec.distance.d <= 4 and quantum.singleton_check(rec)


def test_affine_quantum_purity():
    with within(120):
        rec = quantum.affine_quantum_family(5, 1, 2)
        code = extend(cyclic_code(24, 5, [1, 5]))
        d_a = min_distance(code)
    assert rec.distance.exact and d_a.exact
    assert rec.distance.d == d_a.d


def test_duadic_existence_iff_square():
    bad = []
    with within(120):
        for q in (2, 3, 4, 5):
            for n in range(3, 50, 2):
                if math.gcd(n, q) != 1:
                    continue
                if bool(cyclotomic.find_splittings(n, q)) != cyclotomic.is_square_mod(q, n):
                    bad.append((n, q))
    assert not bad, bad


def test_order_identities():
    with within(10):
        ok1, d1 = verify.check_order_halving(1000)
        ok2, d2 = verify.check_odd_order(1000)
    assert ok1, d1
    assert ok2, d2


def test_mu_minus_q_gives_the_mu_minus_one_splitting():
    bad = []
    with within(60):
        for q in (2, 3):
            Q = q * q
            for n in range(3, 256, 2):
                if math.gcd(n, q) != 1 or cyclotomic.mult_order(Q, n) % 2 == 0:
                    continue
                cosets = cyclotomic.all_cosets(Q, n).cosets
                fixes = all(cyclotomic.apply_multiplier(c, q, n) == frozenset(c) for c in cosets)
                both = cyclotomic.splits_by(Q, n, -1) and cyclotomic.splits_by(Q, n, -q)
                # equal induced coset permutations <=> equal splitting sets
                same = both and (cyclotomic.coset_permutation(Q, n, -1)
                                 == cyclotomic.coset_permutation(Q, n, -q))
                if not (fixes and same):
                    bad.append((n, q))
    assert not bad, f"{len(bad)} failing (n, q), first ones {bad[:8]}"


def test_hermitian_duadic_records():
    expected = {(7, 2): 3, (11, 3): 5, (23, 2): 7}
    with within(300):
        recs = {key: quantum.duadic_quantum(*key) for key in expected}
    for (n, q), d in expected.items():
        rec = recs[(n, q)]
        assert (rec.n, rec.k, rec.q) == (n, 1, q)
        assert rec.distance.exact and rec.distance.method == FULL
        assert rec.distance.d == d
        assert d * d - d + 1 >= n and d * d >= n


def test_degenerate_duadic_n27():
    n, q = 27, 2
    problems = []
    with within(600):
        splittings = cyclotomic.find_splittings(n, q * q, -1)
        assert splittings, "no mu_-1 splitting over GF(4)"
        budget = Budget(support_weight_max=5)
        for sp in splittings:
            codes = quantum.duadic_codes(n, q * q, sp.s1, sp.s2)
            light = min_distance(codes.even1, budget)
            if light.d_lo > 3 or (light.exact and light.d > 3):
                problems.append(("no light even-like word", sorted(sp.s1)))
            wit = np.array(light.witness)
            assert codes.even1.linear.contains_vector(wit)
            outside = min_weight_outside(codes.odd1, codes.even1, budget)
            if outside.d_lo < 6:
                problems.append(("D minus C word below 6", outside.d_lo))
        try:
            rec = quantum.degenerate_duadic_family(n, q)
        except CyclotomeError as exc:
            problems.append(("no record", exc.clause, str(exc)))
        else:
            if not (rec.degenerate and rec.pure_to is not None and rec.pure_to <= 3
                    and rec.distance.d_lo >= 6):
                problems.append(("record", rec.to_dict()))
    assert not problems, problems


def test_cross_oracle_integrity():
    with within(120):
        results = [verify.check_hermitian_dual(17), verify.check_euclidean_dual(17),
                   verify.check_distance_routes()]
    for ok, detail in results:
        assert ok, detail
