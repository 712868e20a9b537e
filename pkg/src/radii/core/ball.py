"""Minimum enclosing Euclidean ball.

Two independent routes:

* ``"welzl"``: Gärtner's move-to-front variant of Welzl's algorithm with
  a deterministic point order (no RNG). Recursion depth is bounded by
  ``n + 1``.
* ``"dual"``: an active-set method on the dual QP
  ``max_w sum w_i |p_i|^2 - |sum w_i p_i|^2`` over the simplex. Used to
  cross-check Welzl before a harness reports a violation.
"""
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize

from radii.core.bodies import as_body
from radii.errors import InputError, SolverFailure
from radii.tolerances import EPS_CERT


@dataclass(frozen=True)
class Ball:
    center: np.ndarray
    radius: float
    support: tuple = field(default=())

    def contains(self, points, tol=0.0):
        d = np.linalg.norm(np.atleast_2d(points) - self.center, axis=1)
        return bool(np.all(d <= self.radius + tol))


def min_enclosing_ball(points, method="welzl"):
    """Smallest Euclidean ball containing ``points``.

    Parameters
    ----------
    points : PointBody or (m, n) array_like
    method : {"welzl", "dual"}

    Returns
    -------
    Ball
        ``radius`` is recomputed as the exact maximum distance from the
        returned center, so containment never depends on solver tolerance.
        ``support`` lists the indices of points within ``EPS_CERT`` of the
        sphere, lowest index first.
    """
    P = as_body(points).points
    if method == "welzl":
        c = _welzl(P)
    elif method == "dual":
        c = _dual_active_set(P)
    else:
        raise InputError(f"unknown method {method!r}")
    d = np.linalg.norm(P - c, axis=1)
    r = float(d.max())
    if r == 0.0:
        return Ball(c, 0.0, (0,))
    support = tuple(int(i) for i in np.flatnonzero(r - d <= EPS_CERT * max(1.0, r)))
    return Ball(c, r, support)


def _circumball(B):
    """Smallest ball with all points of B on its boundary (within aff(B))."""
    if B.shape[0] == 1:
        return B[0].copy(), 0.0
    Q = B[1:] - B[0]
    rhs = 0.5 * np.sum(Q * Q, axis=1)
    alpha, *_ = np.linalg.lstsq(Q @ Q.T, rhs, rcond=None)
    c = B[0] + alpha @ Q
    return c, float(np.sqrt(np.max(np.sum((B - c) ** 2, axis=1))))


def _welzl(P):
    m, n = P.shape
    centroid = P.mean(axis=0)
    # farthest-first order speeds up MTF; stable sort keeps ties by index
    order = np.argsort(-np.sum((P - centroid) ** 2, axis=1), kind="stable")
    scale = 1.0 + float(np.abs(P).max())
    tol = 1e-13 * scale

    def mtf(end, support):
        if support:
            c, r = _circumball(P[support])
        else:
            c, r = None, -1.0
        if len(support) == n + 1:
            return c, r
        i = 0
        while i < end:
            seg = order[i:end]
            if c is None:
                hit = 0
            else:
                d = np.sqrt(np.sum((P[seg] - c) ** 2, axis=1))
                out = np.flatnonzero(d > r + tol)
                if out.size == 0:
                    break
                hit = int(out[0])
            j = i + hit
            p = int(order[j])
            c, r = mtf(j, support + [p])
            order[1:j + 1] = order[0:j].copy()
            order[0] = p
            i = j + 1
        return c, r

    c, _ = mtf(m, [])
    return c


def _dual_active_set(P, max_rounds=200):
    m, n = P.shape
    centroid = P.mean(axis=0)
    first = int(np.argmax(np.sum((P - centroid) ** 2, axis=1)))
    second = int(np.argmax(np.sum((P - P[first]) ** 2, axis=1)))
    active = sorted({first, second})
    scale = 1.0 + float(np.abs(P).max())
    for _ in range(max_rounds):
        S = P[active]
        w = _small_dual_qp(S)
        keep = w > 1e-10
        S_pos = S[keep]
        c, r = _circumball(S_pos)
        # the circumball of the positive-weight support must have its center
        # inside that support's hull; fall back to the QP center otherwise
        if not np.allclose(w[keep] @ S_pos, c, atol=1e-6 * scale):
            c = w @ S
            r = float(np.sqrt(np.max(np.sum((S - c) ** 2, axis=1))))
        d = np.sqrt(np.sum((P - c) ** 2, axis=1))
        far = int(np.argmax(d))
        if d[far] <= r + 1e-12 * scale:
            return c
        active = sorted(set(np.array(active)[keep].tolist()) | {far})
    raise SolverFailure("dual enclosing-ball method did not converge", incumbent=c)


def _small_dual_qp(S):
    k = S.shape[0]
    sq = np.sum(S * S, axis=1)
    G = S @ S.T

    def f(w):
        return w @ G @ w - w @ sq

    def g(w):
        return 2.0 * G @ w - sq

    res = minimize(
        f, np.full(k, 1.0 / k), jac=g, method="SLSQP",
        bounds=[(0.0, 1.0)] * k,
        constraints=[{"type": "eq", "fun": lambda w: w.sum() - 1.0, "jac": lambda w: np.ones(k)}],
        options={"ftol": 1e-15, "maxiter": 500},
    )
    w = np.clip(res.x, 0.0, None)
    return w / w.sum()
