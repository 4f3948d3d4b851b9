from __future__ import annotations

import itertools

import numpy as np
import pytest


def brute_min_weight(gen: np.ndarray, q: int, mul, add, exclude=None) -> float:
    """Minimum nonzero weight over every combination of the rows (independent of the library)."""
    gen = np.asarray(gen)
    k, n = gen.shape
    best = float("inf")
    for coeffs in itertools.product(range(q), repeat=k):
        if not any(coeffs):
            continue
        word = np.zeros(n, dtype=np.int64)
        for c, row in zip(coeffs, gen):
            word = add[word, mul[c, row]]
        if exclude is not None and exclude(word):
            continue
        w = int(np.count_nonzero(word))
        if w:
            best = min(best, w)
    return best


@pytest.fixture
def brute():
    return brute_min_weight
