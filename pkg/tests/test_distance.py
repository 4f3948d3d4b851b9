from __future__ import annotations

import math

import numpy as np
import pytest

from cyclotome.config import Budget
from cyclotome.cyclic import LinearCode, cyclic_code, extend, field_of_order
from cyclotome.distance import (FULL, SUPPORT, min_distance, min_distance_by, min_weight_outside)
from cyclotome.errors import NotSubcode, ZeroCode


def test_hamming_family():
    ham = cyclic_code(7, 2, [1, 2, 4])
    assert min_distance(ham).d == 3
    assert min_distance(extend(ham)).d == 4
    rep = cyclic_code(9, 2, range(1, 9))
    assert min_distance(rep).d == 9


def test_witness_is_a_codeword_of_that_weight():
    code = cyclic_code(15, 4, [1, 4, 2, 8, 3, 12])
    res = min_distance(code)
    wit = np.array(res.witness)
    assert np.count_nonzero(wit) == res.d
    assert code.linear.contains_vector(wit)


def test_outside_subcode():
    ext = extend(cyclic_code(7, 2, [1, 2, 4]))
    res = min_weight_outside(ext, ext.linear.dual())
    assert res.exact and res.d == math.inf
    d1, c1 = cyclic_code(7, 4, [1, 2, 4]), cyclic_code(7, 4, [0, 1, 2, 4])
    assert min_weight_outside(d1, c1).d == 3
    f2 = field_of_order(2)
    assert min_weight_outside(LinearCode.full(f2, 3), LinearCode.zero(f2, 3)).d == 1
    with pytest.raises(NotSubcode):
        min_weight_outside(c1, d1)
    with pytest.raises(ZeroCode):
        min_distance(cyclic_code(7, 2, range(7)))


@pytest.mark.parametrize("n,q,elems", [
    (7, 2, [1, 2, 4]), (15, 2, [1, 2, 4, 8]), (9, 4, [1, 4, 7]), (8, 3, [1, 3]),
    (13, 3, [1, 3, 9, 2, 6, 5]), (10, 9, [0, 1, 9, 3, 7, 5]),
    (21, 2, [1, 2, 4, 8, 16, 11, 3, 6, 12]),
])
def test_routes_agree_with_brute_force(brute, n, q, elems):
    code = cyclic_code(n, q, elems)
    lin = code.linear
    assert q**lin.k <= 2**13
    g = lin.gf
    expected = brute(lin.generator, q, g.mul, g.add)
    assert min_distance_by(code, FULL).d == expected
    assert min_distance_by(code, SUPPORT, Budget(support_weight_max=lin.n)).d == expected


def test_bounds_when_budget_is_exhausted():
    code = cyclic_code(23, 2, [1, 2, 4, 8, 16, 9, 18, 13, 3, 6, 12])
    tight = Budget(enumeration=2**4, support_weight_max=4)
    res = min_distance(code, tight)
    assert res.kind == "lower_and_upper"
    assert res.d_lo == 5 and res.d_hi >= 7
    assert min_distance(code).d == 7


def test_serialization():
    ext = extend(cyclic_code(7, 2, [1, 2, 4]))
    assert min_weight_outside(ext, ext.linear.dual()).to_dict()["d"] == "inf"
    d = min_distance(ext).to_dict()
    assert d["kind"] == "exact" and d["d"] == 4 and len(d["witness"]) == 8
