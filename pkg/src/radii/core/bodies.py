"""Point bodies, H-polytopes and Minkowski sums."""
import math

import numpy as np

from radii.core.lp import solve_lp_arrays
from radii.errors import BudgetError, InputError
from radii.tolerances import MAX_SUM_POINTS


class PointBody:
    """Convex body given as the hull of a finite point set.

    Redundant (interior or duplicate) points are allowed; nothing here
    depends on the hull beyond maxima over the points.
    """

    __slots__ = ("_points",)

    def __init__(self, points):
        pts = np.array(points, dtype=float)
        if pts.ndim == 1:
            pts = pts.reshape(1, -1)
        if pts.ndim != 2 or pts.shape[0] == 0 or pts.shape[1] == 0:
            raise InputError("a body needs at least one point of dimension >= 1")
        if not np.all(np.isfinite(pts)):
            raise InputError("body points must be finite")
        pts.setflags(write=False)
        self._points = pts

    @property
    def points(self):
        return self._points

    @property
    def dim(self):
        return self._points.shape[1]

    def __len__(self):
        return self._points.shape[0]

    def __repr__(self):
        return f"PointBody(dim={self.dim}, n_points={len(self)})"

    def __eq__(self, other):
        if not isinstance(other, PointBody):
            return NotImplemented
        return self._points.shape == other._points.shape and bool(
            np.all(self._points == other._points)
        )

    def __hash__(self):
        return hash(self._points.tobytes())

    def translate(self, t):
        return PointBody(self._points + np.asarray(t, dtype=float))

    def scale(self, s):
        return PointBody(self._points * float(s))

    def support(self, directions):
        """Support function ``h_K(a) = max_v a @ v`` and the arg-max index.

        Ties go to the lowest point index.
        """
        vals = np.atleast_2d(directions) @ self._points.T
        idx = np.argmax(vals, axis=1)
        return vals[np.arange(vals.shape[0]), idx], idx


def as_body(obj):
    return obj if isinstance(obj, PointBody) else PointBody(obj)


class HPolytope:
    """Bounded polytope ``{x : A x <= b}`` with the origin in its interior.

    Rows are rescaled on construction so that every right-hand side is 1.
    """

    __slots__ = ("_A",)

    def __init__(self, A, b=None):
        A = np.array(A, dtype=float)
        if A.ndim != 2 or A.shape[0] == 0 or A.shape[1] == 0:
            raise InputError("A must be a nonempty 2-D array")
        b = np.ones(A.shape[0]) if b is None else np.array(b, dtype=float).reshape(-1)
        if b.size != A.shape[0]:
            raise InputError(f"A has {A.shape[0]} rows but b has {b.size} entries")
        if not (np.all(np.isfinite(A)) and np.all(np.isfinite(b))):
            raise InputError("polytope data must be finite")
        if np.any(b <= 0):
            bad = int(np.flatnonzero(b <= 0)[0])
            raise InputError(f"origin not interior (row {bad} has b = {b[bad]:g} <= 0)")
        A = A / b[:, None]
        if np.any(np.all(A == 0, axis=1)):
            raise InputError("polytope has a zero row")
        A.setflags(write=False)
        self._A = A
        _check_bounded(A)

    @property
    def A(self):
        """Facet normals, normalised so that ``A @ x <= 1`` describes the body."""
        return self._A

    @property
    def b(self):
        return np.ones(self._A.shape[0])

    @property
    def dim(self):
        return self._A.shape[1]

    def __repr__(self):
        return f"HPolytope(dim={self.dim}, n_facets={self._A.shape[0]})"

    def gauge(self, x):
        """Minkowski functional ``max_i a_i @ x`` (vectorised over rows of x)."""
        return np.max(np.atleast_2d(x) @ self._A.T, axis=1)

    def support(self, direction):
        """``max a @ x`` over the polytope, via LP."""
        sol = solve_lp_arrays(
            np.asarray(direction, dtype=float), self._A,
            np.ones(self._A.shape[0]), np.ones(self._A.shape[0]), sense="max",
        )
        return sol.objective

    def contains(self, x, tol=0.0):
        return bool(np.all(self.gauge(x) <= 1.0 + tol))


def _check_bounded(A):
    n = A.shape[1]
    rng = np.random.default_rng(0x5EED)
    dirs = np.vstack([np.eye(n), -np.eye(n), rng.standard_normal((n + 1, n))])
    ones = np.ones(A.shape[0])
    for d in dirs:
        sol = solve_lp_arrays(d, A, ones, ones, sense="max")
        if sol.status != "optimal":
            raise InputError(f"polytope is unbounded (direction {np.round(d, 6).tolist()})")


def minkowski_sum(bodies, max_points=MAX_SUM_POINTS):
    """Full Cartesian-product vector sum of point bodies (no hull pruning).

    Point order is lexicographic in the per-body indices, with the last
    body varying fastest.
    """
    bodies = [as_body(b) for b in bodies]
    if not bodies:
        raise InputError("minkowski_sum needs at least one body")
    dims = {b.dim for b in bodies}
    if len(dims) != 1:
        raise InputError(f"bodies have mismatched dimensions {sorted(dims)}")
    count = math.prod(len(b) for b in bodies)
    if count > max_points:
        raise BudgetError(
            f"Minkowski sum would have {count} points (cap {max_points}); prune inputs first"
        )
    acc = bodies[0].points
    for b in bodies[1:]:
        acc = (acc[:, None, :] + b.points[None, :, :]).reshape(-1, acc.shape[1])
    return PointBody(acc)
