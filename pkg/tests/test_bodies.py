import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from radii.core import HPolytope, PointBody, minkowski_sum
from radii.errors import BudgetError, InputError


def test_point_body_is_immutable_and_comparable():
    K = PointBody([[0.0, 1.0], [2.0, 3.0]])
    assert K.dim == 2 and len(K) == 2
    with pytest.raises(ValueError):
        K.points[0, 0] = 5.0
    assert K == PointBody([[0.0, 1.0], [2.0, 3.0]])
    assert hash(K) == hash(PointBody([[0.0, 1.0], [2.0, 3.0]]))


def test_point_body_rejects_bad_input():
    with pytest.raises(InputError):
        PointBody([[0.0, np.inf]])
    with pytest.raises(InputError):
        PointBody(np.zeros((0, 2)))


def test_support_breaks_ties_by_lowest_index():
    K = PointBody([[1.0, 0.0], [1.0, 1.0], [0.0, 0.0]])
    vals, idx = K.support([[1.0, 0.0]])
    assert vals[0] == 1.0 and idx[0] == 0


def test_minkowski_singletons():
    assert minkowski_sum([PointBody([[0.0]]), PointBody([[5.0]])]) == PointBody([[5.0]])


def test_minkowski_pairs():
    S = minkowski_sum([PointBody([[1, 0], [-1, 0]]), PointBody([[0, 1], [0, -1]])])
    assert sorted(map(tuple, S.points)) == [(-1, -1), (-1, 1), (1, -1), (1, 1)]


def test_minkowski_hexagon_pairs_contain_zero():
    U = [np.array([np.cos(i * np.pi / 3), np.sin(i * np.pi / 3)]) for i in (1, 2, 3)]
    bodies = [PointBody([u, -u]) for u in U]
    S = minkowski_sum(bodies)
    assert len(S) == 8
    assert np.min(np.linalg.norm(S.points, axis=1)) < 1e-12
    # the displayed selection u^1 - u^2 + u^3
    assert np.linalg.norm(U[0] - U[1] + U[2]) < 1e-12


def test_minkowski_budget_and_dimension():
    pair = PointBody([[1.0], [-1.0]])
    with pytest.raises(BudgetError):
        minkowski_sum([pair] * 4, max_points=15)
    assert len(minkowski_sum([pair] * 4, max_points=16)) == 16
    with pytest.raises(InputError):
        minkowski_sum([pair, PointBody([[0.0, 0.0]])])


def _multiset(P):
    return sorted(map(tuple, np.round(P, 9)))


clouds = arrays(np.float64, st.tuples(st.integers(1, 4), st.just(2)),
                elements=st.floats(-5, 5, allow_nan=False))


@settings(max_examples=50, deadline=None)
@given(clouds, clouds, clouds)
def test_minkowski_commutative_associative(a, b, c):
    A, B, C = PointBody(a), PointBody(b), PointBody(c)
    assert _multiset(minkowski_sum([A, B]).points) == _multiset(minkowski_sum([B, A]).points)
    left = minkowski_sum([minkowski_sum([A, B]), C])
    right = minkowski_sum([A, minkowski_sum([B, C])])
    assert _multiset(left.points) == _multiset(right.points)
    assert len(minkowski_sum([A, B, C])) == len(A) * len(B) * len(C)


def test_hpolytope_normalises_rows():
    P = HPolytope([[2.0, 0.0], [-1.0, 0.0], [0.0, 1.0], [0.0, -1.0]], [1.0, 2.0, 0.5, 0.5])
    np.testing.assert_allclose(P.b, 1.0)
    np.testing.assert_allclose(P.A[0], [2.0, 0.0])
    np.testing.assert_allclose(P.A[1], [-0.5, 0.0])
    assert P.gauge([0.5, 0.0]) == pytest.approx(1.0)
    assert P.contains([0.4, 0.0]) and not P.contains([0.6, 0.0])


def test_hpolytope_validation_messages():
    with pytest.raises(InputError, match="origin not interior"):
        HPolytope([[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0], [0.0, -1.0]], [1.0, 0.0, 1.0, 1.0])
    with pytest.raises(InputError, match="unbounded"):
        HPolytope([[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0]], [1.0, 1.0, 1.0])


def test_hpolytope_support_matches_vertices():
    P = HPolytope([[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0], [0.0, -1.0]], [1.0, 2.0, 3.0, 4.0])
    assert P.support([1.0, 1.0]) == pytest.approx(4.0)
    assert P.support([-1.0, -1.0]) == pytest.approx(6.0)
