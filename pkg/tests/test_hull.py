from itertools import combinations

import numpy as np
import pytest

from radii.core import caratheodory_reduce, convex_weights, in_hull, separating_direction
from radii.errors import NotInHullError


def _recheck(points, target, idx, w):
    P = np.asarray(points, dtype=float)
    assert len(idx) <= P.shape[1] + 1
    assert np.all(w > 1e-12)
    assert abs(w.sum() - 1.0) <= 1e-9
    np.testing.assert_allclose(w @ P[idx], target, atol=1e-9)


def test_symmetric_pair_is_kept():
    pts = [[1, 0], [-1, 0], [0, 1]]
    idx, w = caratheodory_reduce(pts, [0, 0])
    assert sorted(idx.tolist()) == [0, 1]
    np.testing.assert_allclose(w, [0.5, 0.5], atol=1e-9)


def test_cross_reduces_to_small_support():
    pts = np.array([[1, 0], [-1, 0], [0, 1], [0, -1]], dtype=float)
    idx, w = caratheodory_reduce(pts, [0, 0])
    _recheck(pts, [0, 0], idx, w)
    # oracle: the returned support is one of the feasible subsets of size <= 3
    feasible = set()
    for k in (2, 3):
        for S in combinations(range(4), k):
            if in_hull(pts[list(S)], np.zeros(2)):
                feasible.add(frozenset(S))
    assert frozenset(idx.tolist()) in feasible


def test_singleton_not_in_hull_carries_separator():
    with pytest.raises(NotInHullError) as info:
        caratheodory_reduce([[2.0, 0.0]], [0.0, 0.0])
    a = np.asarray(info.value.separator)
    assert a @ np.zeros(2) > a @ np.array([2.0, 0.0])


def test_separating_direction_gap():
    a, gap = separating_direction([[1.0, 1.0], [2.0, 0.5]], [0.0, 0.0])
    assert gap > 0
    assert np.all(np.array([[1.0, 1.0], [2.0, 0.5]]) @ a <= a @ np.zeros(2) - gap + 1e-9)


def test_random_reductions_reverify():
    rng = np.random.default_rng(11)
    for _ in range(100):
        n = int(rng.integers(1, 5))
        m = int(rng.integers(n + 1, 15))
        P = rng.standard_normal((m, n))
        lam = rng.dirichlet(np.ones(m))
        t = lam @ P
        idx, w = caratheodory_reduce(P, t)
        _recheck(P, t, idx, w)
        assert convex_weights(P, t) is not None
