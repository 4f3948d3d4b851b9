from __future__ import annotations

import numpy as np
import pytest

from cyclotome.config import Budget
from cyclotome.field import make_field
from cyclotome.linalg import gf


def test_rank_and_nullspace_gf3():
    g = gf(make_field(3))
    m = np.array([[1, 2, 0, 1], [2, 1, 0, 2], [0, 0, 1, 1]])
    assert g.rank(m) == 2
    ns = g.nullspace(m)
    assert ns.shape == (2, 4)
    assert not g.matmul(m, ns.T).any()


def test_rref_edge_cases():
    g = gf(make_field(2, 2))
    red, piv = g.rref(np.zeros((0, 5), dtype=np.int64))
    assert red.shape == (0, 5) and piv == []
    assert g.nullspace(np.zeros((2, 3), dtype=np.int64)).tolist() == np.eye(3, dtype=int).tolist()
    with pytest.raises(ValueError):
        g.rref(np.array([1, 2, 3]))


def test_in_rowspace_and_span_gf4():
    g = gf(make_field(2, 2))
    rows = np.array([[1, 2, 3, 0]])
    span = g.span(rows)
    assert span.shape == (4, 4)
    assert all(g.in_rowspace(rows, w) for w in span)
    assert not g.in_rowspace(rows, np.array([1, 0, 0, 0]))


def test_conjugation_only_for_square_fields():
    assert gf(make_field(2, 2)).conjugate(np.array([2, 3])).tolist() == [3, 2]
    with pytest.raises(ValueError):
        gf(make_field(2, 3)).conjugate(np.array([2]))


def test_budget_from_env(monkeypatch):
    monkeypatch.setenv("CYCLOTOME_BUDGET", "enum=4096,weight=3")
    b = Budget.from_env()
    assert b.enumeration == 4096 and b.support_weight_max == 3
    monkeypatch.setenv("CYCLOTOME_BUDGET", "bogus=1")
    with pytest.raises(ValueError):
        Budget.from_env()
    with pytest.raises(ValueError):
        Budget(enumeration=0)
