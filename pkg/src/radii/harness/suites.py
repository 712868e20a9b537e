"""Inequality suites for circumradii of Minkowski sums.

Each ``check_*`` computes both sides of one inequality for a tuple of
bodies and returns an :class:`InstanceReport` with ``slack = rhs - lhs``:

=================  =========================================  ======================
tag                lhs                                         rhs
=================  =========================================  ======================
``sqrt_j``         ``sum R(K_i)``                              ``sqrt(j) R(sum K_i)``
``sum_of_squares`` ``sum R(K_i)^2``                            ``R(sum K_i)^2``
``factor_j``       ``sum R(K_i, C)``                           ``j R(sum K_i, C)``
``max_bound``      ``max R(K_i, C)``                           ``R(sum K_i, C)``
``planar_three``   ``2``                                       ``R(K_1 + K_2 + K_3)``
=================  =========================================  ======================
"""
import math

import numpy as np

from radii.circum import _polytope_radius, circumradius, extract_certificate
from radii.colourful import BalancedSet, detect_hexagon_equality
from radii.core.bodies import PointBody, as_body, minkowski_sum
from radii.core.hull import in_hull
from radii.core.lp import solve_lp_arrays
from radii.errors import InputError, NoCertificateError
from radii.gauges import Gauge
from radii.harness import generators as gen
from radii.harness.reports import InstanceReport
from radii.tolerances import EPS_CERT, EPS_EQ, EPS_FEAS, MAX_SUM_POINTS

SUITES = ("sqrt_j", "sum_of_squares", "factor_j", "max_bound", "planar_three")


def _bodies(bodies):
    bodies = [as_body(b) for b in bodies]
    if not bodies:
        raise InputError("need at least one body")
    dims = {b.dim for b in bodies}
    if len(dims) != 1:
        raise InputError(f"bodies have mismatched dimensions {sorted(dims)}")
    return bodies


def _report(tag, lhs, rhs, artifacts, instance_id=0, seed=None):
    slack = rhs - lhs
    ratio = lhs / rhs if rhs > 0 else (1.0 if lhs == 0 else math.inf)
    return InstanceReport(
        instance_id=instance_id, seed=seed, theorem_tag=tag, lhs=float(lhs),
        rhs=float(rhs), slack=float(slack), passed=bool(slack >= -EPS_FEAS),
        equality_flag=bool(abs(slack) <= EPS_EQ), ratio=float(ratio),
        artifacts=artifacts,
    )


def _artifacts(bodies, radii, sum_radius, gauge=None):
    a = {
        "bodies": [b.points.tolist() for b in bodies],
        "radii": list(radii),
        "sum_radius": sum_radius,
    }
    if gauge is not None:
        a["gauge"] = gauge.to_dict()
    return a


def _euclidean_radii(bodies, max_points):
    radii = [circumradius(b).radius for b in bodies]
    R = circumradius(minkowski_sum(bodies, max_points=max_points)).radius
    return radii, R


def check_sqrt_j(bodies, max_points=MAX_SUM_POINTS, instance_id=0, seed=None):
    bodies = _bodies(bodies)
    radii, R = _euclidean_radii(bodies, max_points)
    j = len(bodies)
    return _report("sqrt_j", sum(radii), math.sqrt(j) * R,
                   _artifacts(bodies, radii, R), instance_id, seed)


def check_sum_of_squares(bodies, max_points=MAX_SUM_POINTS, instance_id=0, seed=None):
    bodies = _bodies(bodies)
    radii, R = _euclidean_radii(bodies, max_points)
    return _report("sum_of_squares", sum(r * r for r in radii), R * R,
                   _artifacts(bodies, radii, R), instance_id, seed)


def _gauge_radii(bodies, C, max_points):
    radii = [circumradius(b, C).radius for b in bodies]
    R = circumradius(minkowski_sum(bodies, max_points=max_points), C).radius
    return radii, R


def check_factor_j_gauge(bodies, C, max_points=MAX_SUM_POINTS, instance_id=0, seed=None):
    bodies = _bodies(bodies)
    radii, R = _gauge_radii(bodies, C, max_points)
    j = len(bodies)
    return _report("factor_j", sum(radii), j * R,
                   _artifacts(bodies, radii, R, C), instance_id, seed)


def check_max_lower_bound(bodies, C, max_points=MAX_SUM_POINTS, instance_id=0, seed=None):
    bodies = _bodies(bodies)
    radii, R = _gauge_radii(bodies, C, max_points)
    return _report("max_bound", max(radii), R,
                   _artifacts(bodies, radii, R, C), instance_id, seed)


def check_planar_three(bodies, max_points=MAX_SUM_POINTS, instance_id=0, seed=None):
    """Three planar bodies in the unit disk, each of circumradius 1.

    On equality the certificate touch sets are passed to
    :func:`~radii.colourful.detect_hexagon_equality`, and each body is tested
    for containing the diameter segment its certificate points span.

    Raises
    ------
    InputError
        Wrong count or dimension, or a body violating the preconditions
        (the message names it).
    """
    bodies = _bodies(bodies)
    if len(bodies) != 3 or bodies[0].dim != 2:
        raise InputError("planar-three needs exactly 3 bodies in R^2")
    results = []
    for i, b in enumerate(bodies):
        res = circumradius(b, certificate=True)
        if abs(res.radius - 1.0) > EPS_EQ:
            raise InputError(f"body {i}: circumradius {res.radius:.12g}, expected 1")
        far = float(np.linalg.norm(b.points, axis=1).max())
        if far > 1.0 + EPS_CERT:
            raise InputError(f"body {i}: point of norm {far:.12g} lies outside the unit disk")
        results.append(res)
    R = circumradius(minkowski_sum(bodies, max_points=max_points)).radius
    rep = _report("planar_three", 2.0, R, _artifacts(bodies, [1.0, 1.0, 1.0], R),
                  instance_id, seed)
    if rep.equality_flag:
        sets = []
        for res in results:
            cert = res.certificate
            sets.append(BalancedSet(cert.touch_points - res.center, cert.weights, 1.0))
        hexagon = detect_hexagon_equality(sets, tol=1e3 * EPS_EQ)
        contains = [
            bool(s.k == 2 and in_hull(b.points, s.vectors[0]) and in_hull(b.points, -s.vectors[0]))
            for s, b in zip(sets, bodies)
        ]
        rep.artifacts["hexagon_equality"] = bool(hexagon)
        rep.artifacts["contains_segment"] = contains
        rep.artifacts["touch_sets"] = [s.vectors.tolist() for s in sets]
    return rep


CHECKS = {
    "sqrt_j": check_sqrt_j,
    "sum_of_squares": check_sum_of_squares,
    "factor_j": check_factor_j_gauge,
    "max_bound": check_max_lower_bound,
    "planar_three": check_planar_three,
}


def run_check(tag, bodies, gauge=None, **kw):
    if tag not in CHECKS:
        raise InputError(f"unknown suite {tag!r}")
    if tag in ("factor_j", "max_bound"):
        if gauge is None:
            raise InputError(f"suite {tag} needs a gauge")
        return CHECKS[tag](bodies, gauge, **kw)
    return CHECKS[tag](bodies, **kw)


def replay(report):
    """Recompute ``(lhs, rhs)`` from the artifacts embedded in a report."""
    if isinstance(report, dict):
        report = InstanceReport.from_dict(report)
    art = report.artifacts
    bodies = [PointBody(p) for p in art["bodies"]]
    gauge = Gauge.from_dict(art["gauge"]) if "gauge" in art else None
    new = run_check(report.theorem_tag, bodies, gauge)
    return new.lhs, new.rhs


def check_cylinder_equality(bodies, C, report, tol=EPS_EQ):
    """Equality structure of the factor-``j`` bound for a polyhedral gauge.

    For each body ``K_i`` the certificate of ``R(K_i, C)`` yields facet
    normals ``a_i^l`` touching ``K_i``. The candidate cylinder is
    ``C_i = {x : a_i^l @ (x - z) <= R for all l}`` with ``z``, ``R`` the
    center and radius of the sum. Checked:

    (a) ``R(K_i, C_i) = 1`` after scaling by ``R``;
    (b) every other body is flat along ``lin{a_i^l}`` (so the sum of the
        others lies in a translate of its orthogonal complement);
    (c) the LP ``sum K in z' + lam C subset C_1 & ... & C_j`` is feasible.

    Returns
    -------
    dict
        ``verdict`` is ``"true"``, ``"false"`` or ``"inconclusive"`` (no
        certificate available); plus the cylinders and per-check details.

    Raises
    ------
    InputError
        ``report`` is not an equality instance of the factor-``j`` suite.
    """
    bodies = _bodies(bodies)
    if report.theorem_tag != "factor_j" or not report.equality_flag:
        raise InputError("cylinder check needs a factor-j report with equality_flag set")
    if not C.is_polyhedral:
        return {"verdict": "inconclusive", "reason": "gauge is not polyhedral"}
    n = bodies[0].dim
    A_C = C.facets(n)
    total = minkowski_sum(bodies)
    sum_res = circumradius(total, C)
    z, R = sum_res.center, sum_res.radius
    if R <= 0:
        return {"verdict": "inconclusive", "reason": "sum has radius 0"}

    cylinders, radius_ok, orth_ok = [], [], []
    for i, K in enumerate(bodies):
        res = circumradius(K, C)
        try:
            cert = extract_certificate(K, C, res)
        except NoCertificateError as exc:
            return {"verdict": "inconclusive", "reason": f"body {i}: {exc}"}
        if cert.approximate:
            return {"verdict": "inconclusive", "reason": f"body {i}: approximate certificate"}
        # certificate normals are a / R_i; recover the gauge rows a
        normals = _dedupe_rows(cert.normals * res.radius)
        rhs = R + normals @ z
        cylinders.append({"A": normals.tolist(), "b": rhs.tolist()})
        r_cyl = _polytope_radius(K.points, normals).radius
        radius_ok.append(bool(abs(r_cyl / R - 1.0) <= tol))
        flat = True
        for k, other in enumerate(bodies):
            if k == i:
                continue
            proj = other.points @ normals.T
            flat &= bool(np.all(proj.max(axis=0) - proj.min(axis=0) <= tol * max(1.0, R)))
        orth_ok.append(flat)

    lp_ok = _nested_containment_feasible(total.points, A_C, cylinders, tol)
    verdict = all(radius_ok) and all(orth_ok) and lp_ok
    return {
        "verdict": "true" if verdict else "false",
        "cylinders": cylinders,
        "radius_checks": radius_ok,
        "orthogonality_checks": orth_ok,
        "containment_feasible": lp_ok,
        "sum_center": z.tolist(),
        "sum_radius": R,
    }


def _dedupe_rows(A, tol=1e-12):
    out = []
    for a in A:
        if not any(np.abs(a - b).max() <= tol for b in out):
            out.append(a)
    return np.array(out)


def _nested_containment_feasible(S, A_C, cylinders, tol):
    """LP: find (z, lam) with S in z + lam C and z + lam C inside every cylinder.

    ``z + lam C`` lies in ``{x : a @ x <= beta}`` iff
    ``a @ z + lam * h_C(a) <= beta``.
    """
    n = S.shape[1]
    h_S = np.max(A_C @ S.T, axis=1)
    rows = [np.hstack([-A_C, -np.ones((A_C.shape[0], 1))])]
    b = [-h_S]
    C_gauge = Gauge.polytope(A_C)
    for cyl in cylinders:
        A = np.array(cyl["A"])
        beta = np.array(cyl["b"])
        h_C = np.array([C_gauge.hpoly.support(a) for a in A])
        rows.append(np.hstack([A, h_C[:, None]]))
        b.append(beta + tol)
    rows = np.vstack(rows + [np.append(np.zeros(n), -1.0)[None, :]])
    b = np.concatenate(b + [[0.0]])
    sol = solve_lp_arrays(np.zeros(n + 1), rows, np.ones(rows.shape[0]), b)
    return sol.optimal


def random_instance(tag, seed, instance_id, n_max=3, j_max=3, gauge=None):
    """Seeded random ``(bodies, gauge)`` for a suite.

    Dimension and count are drawn from ``[1, n_max]`` and ``[1, j_max]``;
    polytope suites get a random H-polytope gauge unless one is supplied.
    """
    rng = gen.trial_rng(seed, instance_id)
    if tag == "planar_three":
        return [gen.random_unit_planar_body(rng) for _ in range(3)], None
    n = gauge.dim if gauge is not None and gauge.dim is not None else int(rng.integers(1, n_max + 1))
    j = int(rng.integers(1, j_max + 1))
    bodies = gen.random_bodies(rng, n, j)
    if tag in ("factor_j", "max_bound") and gauge is None:
        gauge = gen.random_hpoly_gauge(rng, n)
    return bodies, gauge


def run_random(tag, count, seed, n_max=3, j_max=3, gauge=None):
    """Reports for ``count`` seeded random instances, in instance order."""
    out = []
    for i in range(count):
        bodies, g = random_instance(tag, seed, i, n_max, j_max, gauge)
        out.append(run_check(tag, bodies, g, instance_id=i, seed=seed))
    return out
