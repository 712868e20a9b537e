"""Circumradius with respect to a gauge body, and optimal-containment certificates.

``circumradius(K, C)`` is the least ``rho`` such that ``K`` fits in
``z + rho * C`` for some ``z``. Routes:

* Euclidean ball: minimum enclosing ball (Welzl).
* Polyhedral gauges (H-polytopes, l_1, l_inf): one LP,
  ``min rho  s.t.  h_K(a_i) - a_i @ z <= rho`` over the normalised facets
  ``a_i``. Only the farthest vertex per facet can be active, so the
  facet-times-vertex constraint set collapses to one row per facet.
* Other l_p balls: subgradient descent on ``z -> max_v |v - z|_p`` followed
  by an active-set SLSQP polish.

Certificates
------------
A :class:`Certificate` lists touch points ``p_i`` of ``K`` on the boundary of
the optimal ``z + rho * C``, outer normals ``u_i`` of that scaled gauge at
``p_i``, and positive weights with ``sum w_i u_i = 0``; at most ``n + 1``
entries. Polytope normals are scaled so that ``u_i @ (p_i - z) = 1``;
Euclidean normals are the unit vectors ``(p_i - z) / rho``.
"""
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.optimize import minimize

from radii.core.ball import min_enclosing_ball
from radii.core.bodies import as_body
from radii.core.hull import caratheodory_reduce, convex_weights, in_hull
from radii.core.lp import solve_lp_arrays
from radii.errors import (
    InputError,
    NoCertificateError,
    NotInHullError,
    SolverFailure,
)
from radii.gauges import Gauge
from radii.tolerances import EPS_CERT, EPS_POS


@dataclass(frozen=True)
class Certificate:
    touch_points: np.ndarray
    normals: np.ndarray
    weights: np.ndarray
    approximate: bool = False

    def __len__(self):
        return len(self.weights)

    def to_dict(self):
        return {
            "touch_points": self.touch_points.tolist(),
            "normals": self.normals.tolist(),
            "weights": self.weights.tolist(),
            "approximate": self.approximate,
        }


@dataclass(frozen=True)
class CircumResult:
    radius: float
    center: np.ndarray
    certificate: Optional[Certificate] = None
    method: str = ""
    # route-specific data kept for certificate extraction
    _support: tuple = field(default=(), repr=False, compare=False)
    _duals: Optional[np.ndarray] = field(default=None, repr=False, compare=False)

    @property
    def exact(self):
        return self.method in ("welzl", "lp", "point")


def circumradius(K, C=None, certificate=False, max_iters=5000, tol=1e-10):
    """Circumradius of the body ``K`` with respect to the gauge ``C``.

    Parameters
    ----------
    K : PointBody or (m, n) array_like
    C : Gauge, optional
        Defaults to the Euclidean unit ball.
    certificate : bool
        Attach an optimal-containment certificate (``None`` when the radius
        is zero).
    max_iters, tol
        Iteration cap and stall threshold of the general l_p route.

    Raises
    ------
    InputError
        Dimension mismatch between ``K`` and ``C``.
    SolverFailure
        The l_p descent did not converge; ``incumbent`` holds the best center.
    """
    K = as_body(K)
    C = Gauge.euclidean() if C is None else C
    if C.dim is not None and C.dim != K.dim:
        raise InputError(f"body has dimension {K.dim}, gauge has dimension {C.dim}")
    P = K.points
    if np.all(P == P[0]):
        return CircumResult(0.0, P[0].copy(), None, "point")

    if C.is_euclidean:
        ball = min_enclosing_ball(P)
        res = CircumResult(ball.radius, ball.center, None, "welzl", _support=ball.support)
    elif C.is_polyhedral:
        res = _polytope_radius(P, C.facets(K.dim))
    else:
        res = _lp_descent(P, C.p, max_iters=max_iters, tol=tol)

    if certificate and res.radius > 0:
        res = CircumResult(
            res.radius, res.center, extract_certificate(K, C, res),
            res.method, res._support, res._duals,
        )
    return res


def _polytope_radius(P, A):
    m, n = A.shape
    h = np.max(A @ P.T, axis=1)
    # variables (z, rho): min rho  s.t.  -a_i @ z - rho <= -h_i
    c = np.zeros(n + 1)
    c[-1] = 1.0
    rows = np.hstack([-A, -np.ones((m, 1))])
    sol = solve_lp_arrays(c, rows, np.ones(m), -h)
    if not sol.optimal:
        raise SolverFailure(f"circumradius LP returned {sol.status}")
    z = sol.x[:n]
    rho = float(np.max(h - A @ z))
    return CircumResult(rho, z, None, "lp", _duals=np.clip(sol.duals, 0.0, None))


def _pnorm_grad(x, p):
    """Gradient of |x|_p (unit dual-norm vector); x must be nonzero."""
    ax = np.abs(x)
    norm = np.linalg.norm(x, ord=p)
    return np.sign(x) * (ax / norm) ** (p - 1.0)


def _lp_descent(P, p, max_iters, tol, n_starts=5, window=50):
    m, n = P.shape

    def f_all(z):
        return np.linalg.norm(P - z, ord=p, axis=1)

    centroid = P.mean(axis=0)
    spread = float(np.max(np.linalg.norm(P - centroid, axis=1)))
    rng = np.random.default_rng(0)
    starts = [centroid] + [centroid + 0.1 * spread * rng.standard_normal(n) for _ in range(n_starts - 1)]

    best_z, best_f, converged = None, np.inf, False
    for z0 in starts:
        z = z0.copy()
        vals = f_all(z)
        fz = float(vals.max())
        z_run, f_run = z.copy(), fz
        delta = 0.1 * max(fz, 1e-12)
        last_mark = f_run
        for it in range(1, max_iters + 1):
            k = int(np.argmax(vals))
            g = -_pnorm_grad(P[k] - z, p)
            gg = float(g @ g)
            if gg == 0.0:
                break
            # Polyak step towards the moving target f_run - delta
            z = z - (fz - f_run + delta) / gg * g
            vals = f_all(z)
            fz = float(vals.max())
            if fz < f_run:
                z_run, f_run = z.copy(), fz
            if it % window == 0:
                if last_mark - f_run < tol:
                    converged = True
                    break
                last_mark = f_run
                delta *= 0.5
                z = z_run.copy()
                vals = f_all(z)
                fz = f_run
        if f_run < best_f:
            best_z, best_f = z_run, f_run

    z, polished = _polish_lp(P, p, best_z)
    if not (converged or polished):
        raise SolverFailure(
            f"l_{p:g} circumradius descent did not converge in {max_iters} iterations",
            incumbent=best_z,
        )
    rho = float(f_all(z).max())
    if rho > best_f:
        z, rho = best_z, best_f
    return CircumResult(rho, z, None, "descent")


def _polish_lp(P, p, z0, rounds=20):
    """Active-set SLSQP on ``min t s.t. |v - z|_p <= t`` for v in a working set."""
    m, n = P.shape
    d0 = np.linalg.norm(P - z0, ord=p, axis=1)
    work = set(np.argsort(-d0)[: min(m, 3 * (n + 1))].tolist())
    z = z0.copy()
    scale = 1.0 + float(np.abs(P).max())
    for _ in range(rounds):
        W = P[sorted(work)]

        def cons(x, W=W):
            return x[-1] - np.linalg.norm(W - x[:-1], ord=p, axis=1)

        def cons_jac(x, W=W):
            diff = W - x[:-1]
            J = np.empty((W.shape[0], n + 1))
            for i, row in enumerate(diff):
                J[i, :n] = _pnorm_grad(row, p) if np.any(row) else 0.0
            J[:, -1] = 1.0
            return J

        x0 = np.append(z, np.linalg.norm(W - z, ord=p, axis=1).max())
        res = minimize(
            lambda x: x[-1], x0, jac=lambda x: np.eye(n + 1)[-1], method="SLSQP",
            constraints=[{"type": "ineq", "fun": cons, "jac": cons_jac}],
            options={"ftol": 1e-16, "maxiter": 1000},
        )
        z_new = res.x[:n]
        d = np.linalg.norm(P - z_new, ord=p, axis=1)
        if d.max() <= np.linalg.norm(P - z, ord=p, axis=1).max():
            z = z_new
        t = res.x[-1]
        outside = np.flatnonzero(d > t + 1e-12 * scale)
        new = set(outside.tolist()) - work
        if not new:
            return z, bool(res.success)
        work |= new
    return z, False


def extract_certificate(K, C, result):
    """Optimal-containment certificate for an optimal ``result``.

    Raises
    ------
    NoCertificateError
        Radius zero, or (general l_p) near-active normals do not balance.
    """
    K = as_body(K)
    C = Gauge.euclidean() if C is None else C
    if result.radius <= 0.0:
        raise NoCertificateError("radius 0: no optimal-containment certificate")
    P = K.points
    z, rho = result.center, result.radius
    n = K.dim

    if C.is_euclidean:
        d = np.linalg.norm(P - z, axis=1)
        support = np.array(result._support or np.flatnonzero(rho - d <= EPS_CERT * max(1.0, rho)))
        S = P[support]
        idx, w = caratheodory_reduce(S, z)
        touch = S[idx]
        normals = (touch - z) / rho
        return Certificate(touch, normals, w)

    if C.is_polyhedral:
        A = C.facets(n)
        duals = result._duals
        if duals is None:
            duals = _polytope_radius(P, A)._duals
        vals = A @ P.T
        argmax = np.argmax(vals, axis=1)
        act = np.flatnonzero(duals > EPS_POS)
        normals = A[act] / rho
        idx, w = caratheodory_reduce(normals, np.zeros(n))
        touch = P[argmax[act[idx]]]
        return Certificate(touch, normals[idx], w)

    # general p: near-active points, flagged approximate
    d = np.linalg.norm(P - z, ord=C.p, axis=1)
    near = np.flatnonzero(rho - d <= 1e-5 * max(1.0, rho))
    G = np.array([_pnorm_grad(P[i] - z, C.p) for i in near])
    try:
        idx, w = caratheodory_reduce(G, np.zeros(n), eps=1e-5)
    except NotInHullError:
        raise NoCertificateError("near-active normals of the l_p descent do not balance")
    return Certificate(P[near[idx]], G[idx], w, approximate=True)


@dataclass(frozen=True)
class CertificateCheck:
    count_ok: bool
    weights_positive: bool
    touch_in_body: bool
    on_boundary: bool
    normals_support_body: bool
    normals_outer: bool
    balanced: bool
    max_balance_residual: float
    max_boundary_error: float

    @property
    def ok(self):
        return all((
            self.count_ok, self.weights_positive, self.touch_in_body,
            self.on_boundary, self.normals_support_body, self.normals_outer,
            self.balanced,
        ))


def verify_certificate(K, C, result, cert, tol=EPS_CERT):
    """Re-check a certificate with plain arithmetic (no solver calls)."""
    K = as_body(K)
    C = Gauge.euclidean() if C is None else C
    P = K.points
    n = K.dim
    z, rho = np.asarray(result.center), float(result.radius)
    T, U, w = np.atleast_2d(cert.touch_points), np.atleast_2d(cert.normals), np.asarray(cert.weights)
    scale = max(1.0, float(np.abs(P).max()))

    count_ok = 2 <= len(w) <= n + 1 and T.shape[0] == U.shape[0] == len(w)
    weights_positive = bool(np.all(w > EPS_POS))
    touch_in_body = all(np.min(np.abs(P - t).max(axis=1)) <= tol * scale for t in T)
    gam = C((T - z) / rho)
    bnd_err = float(np.max(np.abs(gam - 1.0)))
    on_boundary = bnd_err <= tol
    supp = (P @ U.T) - np.sum(T * U, axis=1)
    normals_support_body = bool(np.max(supp) <= tol * scale * max(1.0, np.abs(U).max()))

    if C.is_euclidean:
        expect = (T - z) / rho
        normals_outer = bool(np.abs(U - expect).max() <= tol)
    elif C.is_polyhedral:
        A = C.facets(n)
        normals_outer = True
        for t, u in zip(T, U):
            hits = np.abs(A / rho - u).max(axis=1) <= tol
            active = np.abs(A @ (t - z) - rho) <= tol * max(1.0, rho)
            normals_outer &= bool(np.any(hits & active))
    else:
        expect = np.array([_pnorm_grad(t - z, C.p) for t in T])
        normals_outer = bool(np.abs(U - expect).max() <= 1e-5)

    resid = float(np.abs(w @ U).max())
    return CertificateCheck(
        count_ok=bool(count_ok),
        weights_positive=weights_positive,
        touch_in_body=bool(touch_in_body),
        on_boundary=bool(on_boundary),
        normals_support_body=normals_support_body,
        normals_outer=normals_outer,
        balanced=resid <= tol,
        max_balance_residual=resid,
        max_boundary_error=bnd_err,
    )


def check_condition_4(points, directions=0, seed=0, tol=EPS_CERT):
    """Every closed half-sphere meets the point set.

    For points on the unit sphere this is equivalent to ``0 in conv(points)``,
    which is decided by LP. ``directions > 0`` adds a seeded randomized
    falsification pass that can return ``False`` early.

    Raises
    ------
    InputError
        Some point is not on the unit sphere (within ``tol``).
    """
    X = np.atleast_2d(np.asarray(points, dtype=float))
    norms = np.linalg.norm(X, axis=1)
    if np.any(np.abs(norms - 1.0) > tol):
        bad = int(np.argmax(np.abs(norms - 1.0)))
        raise InputError(f"point {bad} has norm {norms[bad]:.9g}, expected 1")
    if directions:
        rng = np.random.default_rng(seed)
        a = rng.standard_normal((int(directions), X.shape[1]))
        if np.any(np.all(X @ a.T < 0.0, axis=0)):
            return False
    return in_hull(X, np.zeros(X.shape[1]))


def balance_weights(vectors):
    """Positive-support weights ``w`` with ``sum w_i v_i = 0`` and ``sum w = 1``."""
    return convex_weights(vectors, np.zeros(np.atleast_2d(vectors).shape[1]))
