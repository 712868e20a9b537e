"""Convex-combination machinery: hull membership, separation, Carathéodory."""
import numpy as np

from radii.core.lp import solve_lp_arrays
from radii.errors import InputError, NotInHullError
from radii.tolerances import EPS_FEAS, EPS_POS


def separating_direction(points, target):
    """Best separator of ``target`` from ``conv(points)`` in the box ``[-1, 1]^n``.

    Returns ``(a, gap)`` with ``gap = a @ target - max_i a @ points[i]``.
    A gap ``<= 0`` means no separator exists (target is in the hull).
    """
    P = np.atleast_2d(np.asarray(points, dtype=float))
    t = np.asarray(target, dtype=float)
    m, n = P.shape
    # variables (a, s): max a@t - s  s.t.  a@p_i - s <= 0,  -1 <= a_k <= 1
    c = np.append(t, -1.0)
    A = np.vstack([
        np.hstack([P, -np.ones((m, 1))]),
        np.hstack([np.eye(n), np.zeros((n, 1))]),
        np.hstack([-np.eye(n), np.zeros((n, 1))]),
    ])
    b = np.concatenate([np.zeros(m), np.ones(2 * n)])
    sol = solve_lp_arrays(c, A, np.ones(A.shape[0]), b, sense="max")
    a = sol.x[:n]
    gap = float(t @ a - np.max(P @ a))
    return a, gap


def convex_weights(points, target, eps=EPS_FEAS):
    """Weights ``w >= 0``, ``sum w = 1`` with ``w @ points ~= target``.

    Raises :class:`NotInHullError` (with a separating direction) when the
    target is farther than ``eps`` (relative to the data scale) from the hull.
    """
    P = np.atleast_2d(np.asarray(points, dtype=float))
    t = np.asarray(target, dtype=float).reshape(-1)
    m, n = P.shape
    if t.size != n:
        raise InputError(f"target has dimension {t.size}, points have {n}")
    scale = 1.0 + max(np.abs(P).max(), np.abs(t).max())
    # variables (w, e): min sum e  s.t.  -e <= P^T w - t <= e,  w >= 0,  sum w = 1
    c = np.concatenate([np.zeros(m), np.ones(n)])
    A = np.vstack([
        np.hstack([P.T, -np.eye(n)]),
        np.hstack([-P.T, -np.eye(n)]),
        np.hstack([-np.eye(m), np.zeros((m, n))]),
        np.hstack([np.ones((1, m)), np.zeros((1, n))]),
    ])
    b = np.concatenate([t, -t, np.zeros(m), [1.0]])
    rel = np.concatenate([np.ones(2 * n + m), [0.0]])
    sol = solve_lp_arrays(c, A, rel, b)
    w = np.clip(sol.x[:m], 0.0, None)
    w = w / w.sum()
    if np.abs(w @ P - t).max() > eps * scale:
        a, gap = separating_direction(P, t)
        raise NotInHullError(
            f"target is not in the convex hull (separation gap {gap:.3e})", a, gap
        )
    return w


def in_hull(points, target, eps=EPS_FEAS):
    try:
        convex_weights(points, target, eps=eps)
    except NotInHullError:
        return False
    return True


def caratheodory_reduce(points, target, eps=EPS_FEAS, eps_pos=EPS_POS):
    """Rewrite ``target`` as a convex combination of at most ``n + 1`` points.

    Parameters
    ----------
    points : (m, n) array_like
    target : (n,) array_like

    Returns
    -------
    indices : ndarray of int
        Sorted indices into ``points`` of an affinely independent support.
    weights : ndarray
        Strictly positive weights (``> eps_pos``) summing to one.

    Raises
    ------
    NotInHullError
        If ``target`` is not in ``conv(points)``; carries a separator.
    """
    P = np.atleast_2d(np.asarray(points, dtype=float))
    t = np.asarray(target, dtype=float).reshape(-1)
    w = convex_weights(P, t, eps=eps)
    idx = np.flatnonzero(w > eps_pos)
    if idx.size == 0:
        idx = np.array([int(np.argmax(w))])
    w = w[idx]
    while True:
        # affine dependence among the support: M mu = 0 with M = [P^T; 1]
        M = np.vstack([P[idx].T, np.ones(idx.size)])
        if idx.size == 1:
            break
        _, s, vt = np.linalg.svd(M)
        rank = int(np.sum(s > 1e-12 * max(1.0, s[0])))
        if rank == idx.size:
            break
        mu = vt[-1]
        if mu.max() <= 0:
            mu = -mu
        pos = mu > 0
        ratio = np.full(idx.size, np.inf)
        ratio[pos] = w[pos] / mu[pos]
        # lowest index wins ties
        k = int(np.argmin(ratio))
        w = w - ratio[k] * mu
        w[k] = 0.0
        keep = w > eps_pos
        idx, w = idx[keep], w[keep]
    w = _refit(P[idx], t, w)
    return idx, w


def _refit(S, t, w0):
    """Least-squares polish of weights on a fixed affinely independent support."""
    M = np.vstack([S.T, np.ones(S.shape[0])])
    rhs = np.append(t, 1.0)
    w, *_ = np.linalg.lstsq(M, rhs, rcond=None)
    if np.all(w > 0) and np.abs(M @ w - rhs).max() <= np.abs(M @ w0 - rhs).max():
        return w
    return w0 / w0.sum()
