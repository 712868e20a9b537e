"""Balanced vector families and colourful selection.

A *balanced set* is a family ``u_1..u_k`` on the sphere of radius ``r`` with
positive weights summing the vectors to zero. Given balanced sets
``U_1..U_j`` and a point ``c``, some choice of one vector per set satisfies

    |u^1 + ... + u^j - c|^2 >= |c|^2 + r_1^2 + ... + r_j^2.

:func:`greedy_select` finds such a choice constructively; the first vector
has ``u @ c <= 0`` and every later one has nonnegative inner product with
the running partial sum minus ``c``. Both choices exist because a positive
combination of the set's vectors is zero.
"""
import itertools
import math
from dataclasses import dataclass

import numpy as np

from radii.core.ball import min_enclosing_ball
from radii.core.bodies import PointBody, minkowski_sum
from radii.core.hull import caratheodory_reduce
from radii.core.lp import solve_lp_arrays
from radii.errors import BudgetError, InputError, InvariantViolation
from radii.tolerances import EPS_CERT, EPS_EQ, EPS_FEAS, EPS_POS, MAX_TUPLES


@dataclass(frozen=True)
class BalancedSet:
    vectors: np.ndarray
    lambdas: np.ndarray
    radius: float

    def __post_init__(self):
        V = np.atleast_2d(np.array(self.vectors, dtype=float))
        lam = np.array(self.lambdas, dtype=float).reshape(-1)
        r = float(self.radius)
        if not (np.all(np.isfinite(V)) and np.all(np.isfinite(lam)) and math.isfinite(r)):
            raise InputError("balanced set data must be finite")
        if r <= 0:
            raise InputError(f"radius must be positive, got {r}")
        k, n = V.shape
        if lam.size != k:
            raise InputError(f"{k} vectors but {lam.size} lambdas")
        if k < 2:
            raise InputError("a balanced set needs at least 2 vectors")
        norms = np.linalg.norm(V, axis=1)
        if np.any(np.abs(norms - r) > EPS_CERT * max(1.0, r)):
            bad = int(np.argmax(np.abs(norms - r)))
            raise InputError(f"vector {bad} has norm {norms[bad]:.12g}, expected radius {r:.12g}")
        if np.any(lam <= EPS_POS):
            raise InputError("lambdas must be strictly positive")
        resid = np.abs(lam @ V).max() / lam.sum()
        if resid > EPS_CERT * max(1.0, r):
            raise InputError(f"vectors are not balanced by lambdas (residual {resid:.3e})")
        V.setflags(write=False)
        lam.setflags(write=False)
        object.__setattr__(self, "vectors", V)
        object.__setattr__(self, "lambdas", lam)
        object.__setattr__(self, "radius", r)

    @property
    def dim(self):
        return self.vectors.shape[1]

    @property
    def k(self):
        return self.vectors.shape[0]

    @classmethod
    def from_vectors(cls, vectors, radius=None):
        """Build a balanced set, solving for the weights by LP.

        The weights maximise the smallest weight, so every vector gets a
        positive one when that is possible at all. Raises
        :class:`~radii.errors.NotInHullError` when ``0`` is not in the convex
        hull of ``vectors``.
        """
        V = np.atleast_2d(np.array(vectors, dtype=float))
        if radius is None:
            radius = float(np.linalg.norm(V[0]))
        # raises NotInHullError (with separator) when 0 is outside the hull
        caratheodory_reduce(V, np.zeros(V.shape[1]))
        lam = _strictly_positive_balance(V)
        return cls(V, lam, radius)

    def rotate(self, Q):
        return BalancedSet(self.vectors @ np.asarray(Q).T, self.lambdas, self.radius)

    def to_dict(self):
        return {
            "radius": self.radius,
            "vectors": self.vectors.tolist(),
            "lambdas": self.lambdas.tolist(),
        }


def _strictly_positive_balance(V):
    k, n = V.shape
    # max t  s.t.  V^T lam = 0, sum lam = 1, lam_i >= t
    c = np.append(np.zeros(k), 1.0)
    A = np.vstack([
        np.hstack([V.T, np.zeros((n, 1))]),
        np.append(np.ones(k), 0.0)[None, :],
        np.hstack([-np.eye(k), np.ones((k, 1))]),
    ])
    b = np.concatenate([np.zeros(n), [1.0], np.zeros(k)])
    rel = np.concatenate([np.zeros(n + 1), np.ones(k)])
    sol = solve_lp_arrays(c, A, rel, b, sense="max")
    if sol.optimal and sol.x[-1] > EPS_POS:
        return sol.x[:k]
    raise InputError(
        "some vectors cannot carry a positive weight in any balancing combination"
    )


@dataclass(frozen=True)
class SelectionResult:
    indices: tuple
    achieved: float
    guarantee: float


def _check_sets(sets, c=None):
    if not sets:
        raise InputError("need at least one balanced set")
    dims = {s.dim for s in sets}
    if len(dims) != 1:
        raise InputError(f"sets have mismatched dimensions {sorted(dims)}")
    n = dims.pop()
    if c is None:
        return n, np.zeros(n)
    c = np.asarray(c, dtype=float).reshape(-1)
    if c.size != n:
        raise InputError(f"c has dimension {c.size}, sets have {n}")
    return n, c


def _row_norms(X):
    return np.sqrt(np.sum(X * X, axis=-1))


def _selection_norm(sets, indices, c):
    acc = sets[0].vectors[indices[0]]
    for s, i in zip(sets[1:], indices[1:]):
        acc = acc + s.vectors[i]
    return float(_row_norms((acc - c)[None, :])[0])


def guarantee(sets, c=None):
    _, c = _check_sets(sets, c)
    return math.sqrt(float(c @ c) + sum(s.radius ** 2 for s in sets))


def greedy_select(sets, c=None):
    """Constructive colourful selection.

    ``m_1`` minimises ``u @ c``; for ``t >= 2``, ``m_t`` maximises
    ``u @ (partial - c)``. Ties go to the lowest index.

    Raises
    ------
    InvariantViolation
        The extremal inner product has the wrong sign beyond ``EPS_FEAS``
        slack, i.e. the set was not genuinely balanced.
    """
    n, c = _check_sets(sets, c)
    scale = max(1.0, float(np.linalg.norm(c)))
    first = sets[0].vectors @ c
    m = int(np.argmin(first))
    if first[m] > EPS_FEAS * scale * sets[0].radius:
        raise InvariantViolation(f"set 0: min u@c = {first[m]:.3e} > 0")
    chosen = [m]
    partial = sets[0].vectors[m].copy()
    for t, s in enumerate(sets[1:], start=1):
        d = partial - c
        vals = s.vectors @ d
        m = int(np.argmax(vals))
        if vals[m] < -EPS_FEAS * max(1.0, float(np.linalg.norm(d))) * s.radius:
            raise InvariantViolation(f"set {t}: max u@(partial-c) = {vals[m]:.3e} < 0")
        chosen.append(m)
        partial = partial + s.vectors[m]
    idx = tuple(chosen)
    return SelectionResult(idx, _selection_norm(sets, idx, c), guarantee(sets, c))


def _tuple_count(sets, cap):
    count = math.prod(s.k for s in sets)
    if count > cap:
        raise BudgetError(f"{count} index tuples exceed the cap {cap}")
    return count


def all_sums(sets, max_tuples=MAX_TUPLES):
    """Every ``u^1_{l_1} + ... + u^j_{l_j}``, last set varying fastest."""
    _tuple_count(sets, max_tuples)
    acc = sets[0].vectors
    for s in sets[1:]:
        acc = (acc[:, None, :] + s.vectors[None, :, :]).reshape(-1, acc.shape[1])
    return acc


def brute_force_max(sets, c=None, max_tuples=MAX_TUPLES):
    """Exact ``max |u^1_{l_1} + ... + u^j_{l_j} - c|`` over all index tuples."""
    n, c = _check_sets(sets, c)
    vals = _row_norms(all_sums(sets, max_tuples) - c)
    flat = int(np.argmax(vals))
    idx = tuple(int(i) for i in np.unravel_index(flat, [s.k for s in sets]))
    return SelectionResult(idx, float(vals[flat]), guarantee(sets, c))


def minmax_center(sets, max_tuples=MAX_TUPLES):
    """``min_c max_l |sum u - c|``: the enclosing ball of all selection sums.

    Returns ``(center, value)``.
    """
    _check_sets(sets)
    ball = min_enclosing_ball(all_sums(sets, max_tuples))
    return ball.center, ball.radius


def as_bodies(sets):
    return [PointBody(s.vectors) for s in sets]


def minmax_center_via_sum(sets, max_tuples=MAX_TUPLES):
    """Same value as :func:`minmax_center`, through :func:`minkowski_sum`."""
    ball = min_enclosing_ball(minkowski_sum(as_bodies(sets), max_points=max_tuples))
    return ball.center, ball.radius


def random_balanced_set(dim, radius, k, rng_seed):
    """Random balanced set of ``k`` vectors on the sphere of given radius.

    ``k - 1`` uniform directions with weights in ``[0.1, 1]``; the last
    vector points against their weighted sum. Near-cancelling draws are
    rejected and redrawn.
    """
    if not 2 <= k <= dim + 1:
        raise InputError(f"k must lie in [2, {dim + 1}], got {k}")
    if radius <= 0:
        raise InputError("radius must be positive")
    rng = rng_seed if isinstance(rng_seed, np.random.Generator) else np.random.default_rng(rng_seed)
    while True:
        U = rng.standard_normal((k - 1, dim))
        U /= _row_norms(U)[:, None]
        lam = rng.uniform(0.1, 1.0, size=k - 1)
        w = lam @ U
        nw = float(np.linalg.norm(w))
        if nw >= 1e-8:
            break
    V = np.vstack([radius * U, -radius * w / nw])
    return BalancedSet(V, np.append(lam, nw), radius)


def hexagon_sets():
    """The three antipodal pairs ``{+-(cos(i pi/3), sin(i pi/3))}``, i = 1, 2, 3."""
    out = []
    for i in (1, 2, 3):
        u = np.array([math.cos(i * math.pi / 3), math.sin(i * math.pi / 3)])
        out.append(BalancedSet(np.vstack([u, -u]), [0.5, 0.5], 1.0))
    return out


def orthonormal_pair_sets(n, radii=None):
    radii = [1.0] * n if radii is None else radii
    return [
        BalancedSet(np.vstack([r * e, -r * e]), [0.5, 0.5], r)
        for r, e in zip(radii, np.eye(n))
    ]


def _span_rank(V, tol):
    s = np.linalg.svd(V, compute_uv=False)
    return int(np.sum(s > tol * max(1.0, s[0])))


def detect_orthogonal_equality(sets, tol=EPS_EQ):
    """Whether distinct sets are mutually orthogonal with total span dimension <= n."""
    n, _ = _check_sets(sets)
    for a, b in itertools.combinations(sets, 2):
        if np.abs(a.vectors @ b.vectors.T).max() > tol * a.radius * b.radius:
            return False
    return sum(_span_rank(s.vectors, tol) for s in sets) <= n


def _rotation(theta):
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s], [s, c]])


def detect_hexagon_equality(sets, tol=EPS_EQ):
    """Whether three planar unit sets are, up to a common rotation, the hexagon pairs.

    Each set must be an antipodal pair; after rotating the first direction to
    angle pi/3, the other two must match the lines at 2 pi/3 and pi in either
    order.
    """
    if len(sets) != 3:
        raise InputError(f"need exactly 3 sets, got {len(sets)}")
    for i, s in enumerate(sets):
        if s.dim != 2:
            raise InputError(f"set {i} is not planar")
        if abs(s.radius - 1.0) > tol:
            raise InputError(f"set {i} has radius {s.radius}, expected 1")
    for s in sets:
        if s.k != 2 or np.abs(s.vectors[0] + s.vectors[1]).max() > tol:
            return False
    dirs = [s.vectors[0] for s in sets]
    Q = _rotation(math.pi / 3 - math.atan2(dirs[0][1], dirs[0][0]))
    rest = [Q @ d for d in dirs[1:]]
    templates = [
        np.array([math.cos(2 * math.pi / 3), math.sin(2 * math.pi / 3)]),
        np.array([-1.0, 0.0]),
    ]

    def same_line(u, v):
        return min(np.abs(u - v).max(), np.abs(u + v).max()) <= tol

    return any(
        same_line(rest[0], templates[a]) and same_line(rest[1], templates[1 - a])
        for a in (0, 1)
    )
