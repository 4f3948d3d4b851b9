from __future__ import annotations

import pytest

from cyclotome import affine
from cyclotome.cyclic import DefiningSet, code_from_defining_set, cyclic_code, extend
from cyclotome.errors import InvalidParameters, NotPrime


def test_invariance_criterion():
    assert affine.is_affine_invariant(DefiningSet.of(7, 2, [1, 2, 4]), 2, 3)
    assert not affine.is_affine_invariant(DefiningSet.of(7, 2, [3, 5, 6]), 2, 3)
    assert affine.is_affine_invariant(DefiningSet.of(7, 2, range(7)), 2, 3)


def test_permutation_oracle():
    assert affine.is_affine_invariant_oracle(extend(cyclic_code(7, 2, [1, 2, 4])), 2, 3)
    assert not affine.is_affine_invariant_oracle(extend(cyclic_code(7, 2, [3, 5, 6])), 2, 3)
    assert affine.is_affine_invariant_oracle(extend(cyclic_code(7, 2, [])), 2, 3)


@pytest.mark.parametrize("p,r,m", [(2, 1, 3), (2, 1, 4), (3, 1, 2), (2, 2, 4), (5, 1, 2)])
def test_criterion_agrees_with_oracle_on_all_unions(p, r, m):
    from cyclotome.verify import coset_unions
    n, q = p**m - 1, p**r
    for elems in coset_unions(q, n, limit=2**8):
        t = DefiningSet.of(n, q, elems)
        assert affine.is_affine_invariant(t, p, m) == affine.is_affine_invariant_oracle(
            extend(code_from_defining_set(t)), p, m), elems


def test_maximal_codes():
    recs = affine.maximal_affine_invariant_codes(2, 1, 3)
    assert [r.t.elements for r in recs] == [(1, 2, 4)]
    recs = affine.maximal_affine_invariant_codes(2, 2, 4)
    assert [r.t.elements for r in recs] == [(1, 4), (2, 8)]
    recs = affine.maximal_affine_invariant_codes(5, 1, 2)
    assert [r.t.elements for r in recs] == [(1, 5)]
    with pytest.raises(InvalidParameters):
        affine.maximal_affine_invariant_codes(2, 2, 3)
    with pytest.raises(NotPrime):
        affine.maximal_affine_invariant_codes(4, 1, 2)


def test_dual_containment():
    assert affine.dual_contained_maximal(5, 1, 2, 0)
    assert not affine.dual_contained_maximal(2, 1, 2, 0)
    assert not affine.dual_contained_maximal(3, 1, 1, 0)
    assert affine.dual_contained_by_matrix(5, 1, 2, 0)
    assert not affine.dual_contained_by_matrix(2, 1, 2, 0)


def test_extended_defining_set_convention():
    # 0 in T puts the extended coordinate's index n into the extended set
    t = DefiningSet.of(7, 2, [0, 1, 2, 4])
    assert affine.extended_defining_set(t) == {0, 1, 2, 4, 7}
    assert affine.extended_defining_set(t.with_elements([1, 2, 4])) == {0, 1, 2, 4}


def test_record_serializes():
    row = affine.maximal_affine_invariant_codes(5, 1, 2)[0].to_dict()
    assert row["defining_set"] == [1, 5] and row["affine_invariant"] and row["dual_contained"]


def test_extended_set_readings_against_oracle():
    # adjoining only 0 misjudges codes whose defining set contains 0; adding the
    # index n for that case agrees with the permutation oracle everywhere
    from cyclotome.cyclotomic import precedes
    from cyclotome.verify import coset_unions

    def literal(t, p, m):
        ext = set(t.elements) | {0}
        return all(s in ext for top in ext for s in range(p**m - 1) if precedes(s, top, p, m))

    ours_bad, literal_bad = [], []
    for p, r, m in [(2, 1, 3), (2, 1, 4), (3, 1, 2), (2, 2, 4), (5, 1, 2)]:
        n, q = p**m - 1, p**r
        for elems in coset_unions(q, n, limit=2**8):
            t = DefiningSet.of(n, q, elems)
            truth = affine.is_affine_invariant_oracle(extend(code_from_defining_set(t)), p, m)
            if affine.is_affine_invariant(t, p, m) != truth:
                ours_bad.append(elems)
            if literal(t, p, m) != truth:
                literal_bad.append(elems)
    assert not ours_bad
    assert literal_bad and all(0 in e for e in literal_bad)
