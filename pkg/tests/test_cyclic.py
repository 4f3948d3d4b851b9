from __future__ import annotations


import numpy as np
import pytest

from cyclotome import cyclic
from cyclotome.cyclotomic import cyclotomic_coset
from cyclotome.cyclic import DefiningSet, code_from_defining_set, cyclic_code, extend, generator_matrix
from cyclotome.distance import min_distance
from cyclotome.errors import NotCosetClosed, NotSquareField, ZeroCode
from cyclotome.linalg import gf


def test_generator_polynomials():
    c = cyclic_code(7, 2, [1, 2, 4])
    assert c.g.encodings() == [1, 1, 0, 1] and c.k == 4
    c = cyclic_code(7, 2, [])
    assert c.g.encodings() == [1] and c.k == 7
    c = cyclic_code(7, 2, [0])
    assert c.g.encodings() == [1, 1] and c.k == 6


def test_generator_divides_xn_minus_one():
    for q, n in [(2, 15), (3, 8), (4, 21), (9, 10)]:
        t = DefiningSet.of(n, q, [1, *cyclotomic_coset(1, q, n)])
        c = code_from_defining_set(t)
        _, rem = divmod(cyclic.xn_minus_one(c.field, n), c.g)
        assert rem.degree < 0 or not any(rem.encodings())


def test_not_coset_closed():
    with pytest.raises(NotCosetClosed):
        DefiningSet.of(7, 2, [1, 2])


def test_dual_defining_sets():
    t = DefiningSet.of(7, 2, [1, 2, 4])
    assert cyclic.dual_defining_set(t).elements == (0, 1, 2, 4)
    assert cyclic.dual_defining_set(t.with_elements([])).elements == tuple(range(7))
    assert cyclic.dual_defining_set(t.with_elements(range(7))).elements == ()
    h = DefiningSet.of(7, 4, [0, 1, 2, 4])
    assert cyclic.hermitian_dual_defining_set(h).elements == (1, 2, 4)
    assert cyclic.hermitian_dual_defining_set(h.with_elements(range(7))).elements == ()
    assert cyclic.hermitian_dual_defining_set(h.with_elements([])).elements == tuple(range(7))
    with pytest.raises(NotSquareField):
        cyclic.hermitian_dual_defining_set(t)


def test_dual_matches_matrix_orthogonality():
    t = DefiningSet.of(15, 2, [1, 2, 4, 8, 3, 6, 12, 9])
    a = code_from_defining_set(t).linear
    b = code_from_defining_set(cyclic.dual_defining_set(t)).linear
    assert a.k + b.k == 15
    assert not a.gf.matmul(a.generator, b.generator.T).any()


def test_containment():
    c1 = cyclic_code(7, 2, [0, 1, 2, 4])
    d1 = cyclic_code(7, 2, [1, 2, 4])
    full = cyclic_code(7, 2, [])
    assert cyclic.contains(d1, c1) and not cyclic.contains(c1, d1)
    assert cyclic.contains(full, c1) and cyclic.contains(c1, c1)
    assert d1.linear.contains_code(c1.linear)


def test_generator_matrices():
    g = generator_matrix(cyclic_code(3, 2, [0]))
    assert g.tolist() == [[1, 1, 0], [0, 1, 1]]
    h = generator_matrix(cyclic_code(7, 2, [1, 2, 4]))
    assert h.shape == (4, 7) and gf(cyclic.field_of_order(2)).rank(h) == 4
    assert generator_matrix(cyclic_code(5, 2, [])).tolist() == np.eye(5, dtype=int).tolist()
    with pytest.raises(ZeroCode):
        generator_matrix(cyclic_code(7, 2, range(7)))


def test_cyclic_shift_invariance():
    c = cyclic_code(15, 4, [1, 4])
    lin = c.linear
    assert not lin.syndromes(np.roll(lin.generator, 1, axis=1)).any()


def test_extension():
    ham = extend(cyclic_code(7, 2, [1, 2, 4]))
    assert (ham.n, ham.k) == (8, 4)
    assert min_distance(ham).d == 4
    assert not (ham.generator_matrix().sum(axis=1) % 2).any()
    rep = extend(cyclic_code(4, 3, [1, 2, 3]))  # repetition code over GF(3)
    assert rep.generator_matrix().tolist() == [[2, 1, 1, 1, 1]]
    assert extend(cyclic_code(7, 2, range(7))).linear.k == 0


def test_extension_row_sums_vanish_gf9():
    ext = extend(cyclic_code(8, 9, [1]))
    g = gf(ext.field)
    for row in ext.generator_matrix():
        acc = 0
        for x in row:
            acc = g.add[acc, x]
        assert acc == 0


def test_json_roundtrip():
    c = cyclic_code(7, 2, [1, 2, 4])
    d = c.to_dict()
    assert d["defining_set"] == [1, 2, 4] and d["generator"] == [1, 1, 0, 1]
    assert extend(c).to_dict()["length"] == 8
