from __future__ import annotations

import pytest

from cyclotome import quantum
from cyclotome.config import Budget
from cyclotome.cyclic import LinearCode, cyclic_code, extend, field_of_order
from cyclotome.distance import DistanceResult
from cyclotome.errors import (DualNotContained, LemmaFiveExcluded, NoSplitting,
                              NotHermitianSelfOrthogonal, PreconditionFailed)


def _params(rec):
    return rec.n, rec.k, rec.q


def test_css_examples():
    ham = cyclic_code(7, 2, [1, 2, 4])
    ext = extend(ham)
    rec = quantum.css_construct(ext, ext)
    assert _params(rec) == (8, 0, 2) and rec.distance.d_lo == 4
    rec = quantum.css_construct(ham, ham)
    assert _params(rec) == (7, 1, 2) and rec.distance.d == 3
    full = LinearCode.full(field_of_order(2), 3)
    rec = quantum.css_construct(full, full)
    assert _params(rec) == (3, 3, 2) and rec.distance.d == 1


def test_css_requires_dual_containment():
    even = cyclic_code(7, 2, [0, 1, 2, 4])
    with pytest.raises(DualNotContained):
        quantum.css_construct(even, even)


def test_hermitian_examples():
    rec = quantum.hermitian_construct(cyclic_code(7, 4, [0, 1, 2, 4]))
    assert _params(rec) == (7, 1, 2) and rec.distance.d == 3
    rec = quantum.hermitian_construct(LinearCode.zero(field_of_order(4), 5))
    assert _params(rec) == (5, 5, 2) and rec.distance.d == 1
    with pytest.raises(NotHermitianSelfOrthogonal):
        quantum.hermitian_construct(cyclic_code(7, 4, [1, 2, 4]))


def test_hermitian_gf9():
    rec = quantum.hermitian_construct(cyclic_code(11, 9, [0, 1, 3, 4, 5, 9]))
    assert _params(rec) == (11, 1, 3) and rec.distance.d == 5


def test_affine_family():
    rec = quantum.affine_quantum_family(5, 1, 2)
    assert _params(rec) == (25, 19, 5)
    assert rec.distance.exact and 3 <= rec.distance.d <= 4
    assert rec.provenance["pure_confirmed"] and rec.provenance["d_A"] == rec.distance.d
    rec = quantum.affine_quantum_family(2, 1, 3)
    assert _params(rec) == (8, 0, 2) and rec.distance.d_lo == 4
    with pytest.raises(LemmaFiveExcluded):
        quantum.affine_quantum_family(2, 1, 2)


def test_affine_family_r2_both_cosets():
    for j in range(2):
        rec = quantum.affine_quantum_family(2, 2, 4, j=j)
        assert _params(rec) == (16, 10, 4) and rec.distance.d == 3


@pytest.mark.parametrize("n,q,d", [(7, 2, 3), (11, 3, 5)])
def test_duadic_family(n, q, d):
    rec = quantum.duadic_quantum(n, q)
    assert _params(rec) == (n, 1, q) and rec.distance.d == d
    assert d * d - d + 1 >= n and rec.provenance["sqrt_bound_holds"]


def test_duadic_family_rejects_even_order():
    with pytest.raises(Exception) as info:
        quantum.duadic_quantum(5, 2)
    assert info.value.clause == "OrderNotOdd"


def test_degenerate_preconditions():
    with pytest.raises(PreconditionFailed) as info:
        quantum.degenerate_duadic_family(9, 2)
    assert info.value.violated == "exponent_bound"
    with pytest.raises(PreconditionFailed) as info:
        quantum.degenerate_duadic_family(13, 2)
    assert info.value.violated == "prime_congruence"


def test_degenerate_parameter_record():
    rec = quantum.degenerate_duadic_family(343, 2)
    assert _params(rec) == (343, 1, 2)
    assert rec.distance.kind == "lower_and_upper" and rec.distance.d_lo == 19
    assert rec.pure_to <= 7 and rec.degenerate


def test_degenerate_n27_has_no_hermitian_splitting():
    # ord_27(2) = 18 is even, so mu_-2 fixes cosets over GF(4) and no splitting exists
    with pytest.raises(NoSplitting):
        quantum.degenerate_duadic_family(27, 2)


def test_singleton_check():
    def rec(n, k, d):
        dist = DistanceResult("exact", d, d, "full_enumeration", 0)
        return quantum.QuantumCodeRecord(n, k, 5, dist, None, None, None, quantum.CSS, {})
    assert quantum.singleton_check(rec(25, 19, 4))
    assert quantum.singleton_check(rec(7, 1, 4))
    assert not quantum.singleton_check(rec(7, 1, 5))


def test_budget_exhaustion_gives_bounds():
    tight = Budget(enumeration=2**6, support_weight_max=2)
    rec = quantum.duadic_quantum(7, 2, tight)
    assert rec.distance.kind == "lower_and_upper" and rec.distance.d_lo == 3


def test_record_json():
    d = quantum.duadic_quantum(7, 2).to_dict()
    assert d["n"] == 7 and d["k"] == 1 and d["d"]["kind"] == "exact" and d["d"]["d"] == 3
    assert d["family"] == "duadic_theorem14"
    assert d["provenance"]["ingredients"][0]["defining_set"] == [0, 1, 2, 4]
