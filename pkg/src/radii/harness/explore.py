"""Numeric explorers for two open conjectures (report only, nothing proven).

``lp_superadditivity``
    For ``p in [2, inf]``: ``R(K_1+...+K_j, B_p) >= |(R(K_1, B_p), ..., R(K_j, B_p))|_p``.
    ``p = 2`` and ``p = inf`` are known to hold.

``n_plus_one_sets``
    For ``n + 1`` balanced sets on the unit sphere of R^n:
    ``min_c max |u^1 + ... + u^{n+1} - c| >= sqrt(n + 2)``, with conjectured
    extremal configurations built from regular simplices.
"""
import math

import numpy as np

from radii.circum import circumradius
from radii.colourful import BalancedSet, all_sums, minmax_center, random_balanced_set
from radii.core.ball import min_enclosing_ball
from radii.core.bodies import PointBody, minkowski_sum
from radii.errors import InputError
from radii.gauges import Gauge
from radii.harness import generators as gen
from radii.harness.reports import ConjectureReport
from radii.tolerances import EPS_EQ, EPS_FEAS

N_EXTREMAL = 3


def _pnorm(v, p):
    return float(np.linalg.norm(np.asarray(v, dtype=float), ord=p))


def _lp_slack(bodies, p, tighten=False):
    C = Gauge.lp(p)
    tol = 1e-12 if tighten else 1e-10
    if tighten and p == 2:
        radii = [min_enclosing_ball(b, method="dual").radius for b in bodies]
        R = min_enclosing_ball(minkowski_sum(bodies), method="dual").radius
    else:
        radii = [circumradius(b, C, tol=tol).radius for b in bodies]
        R = circumradius(minkowski_sum(bodies), C, tol=tol).radius
    return R - _pnorm(radii, p), radii, R


def explore_lp_conjecture(n, p, trials, seed, j_range=(2, 3)):
    """Random search for violations of l_p superadditivity of circumradii."""
    p = math.inf if isinstance(p, str) and p.lower() == "inf" else float(p)
    if not 2.0 <= p <= math.inf:
        raise InputError(f"p must lie in [2, inf], got {p}")
    if n < 1:
        raise InputError("n must be positive")
    exact = p in (2.0, math.inf)
    threshold = EPS_FEAS if exact else EPS_EQ

    records = []
    for t in range(trials):
        rng = gen.trial_rng(seed, t)
        j = int(rng.integers(j_range[0], j_range[1] + 1))
        bodies = gen.random_bodies(rng, n, j)
        slack, radii, R = _lp_slack(bodies, p)
        records.append({
            "trial": t, "slack": slack, "radii": radii, "sum_radius": R,
            "bodies": [b.points.tolist() for b in bodies],
        })

    violations = []
    for rec in records:
        if rec["slack"] < -threshold:
            bodies = [np.array(b) for b in rec["bodies"]]
            slack2, _, _ = _lp_slack([PointBody(b) for b in bodies], p, tighten=True)
            if slack2 < -threshold:
                violations.append(dict(rec, reverified_slack=slack2))

    tight = gen.axis_segments(n)
    t_slack, t_radii, t_R = _lp_slack(tight, p)
    ranked = sorted(records, key=lambda r: (r["slack"], r["trial"]))
    return ConjectureReport(
        conjecture_tag="lp_superadditivity",
        params={"n": n, "p": p, "seed": seed},
        trials=trials,
        min_observed_slack=ranked[0]["slack"] if ranked else math.nan,
        argmin_trial=ranked[0]["trial"] if ranked else None,
        violations=violations,
        extremal_candidates=ranked[:N_EXTREMAL],
        extras={
            "theorem_backed": exact,
            "tightness_example": {
                "bodies": "axis segments [-e_i, e_i], i = 1..n",
                "radii": t_radii, "sum_radius": t_R,
                "expected_sum_radius": n ** (1.0 / p),
                "slack": t_slack,
            },
        },
    )


def _pair_sets(directions):
    return [BalancedSet(np.vstack([u, -u]), [0.5, 0.5], 1.0) for u in directions]


def candidate_directions(n):
    """Conjectured extremal directions ``u^1..u^{n+1}`` in R^n.

    Returns a list of ``(k, directions)``: for even ``n`` one entry (``k =
    n/2``, a regular n-simplex); for odd ``n`` one entry per admissible
    ``k = 1..(n-1)/2`` (a regular 2k-simplex plus an orthonormal completion).
    """
    if n < 2:
        raise InputError("n must be at least 2")
    if n % 2 == 0:
        return [(n // 2, gen.regular_simplex(n))]
    out = []
    for k in range(1, (n - 1) // 2 + 1):
        U = np.zeros((n + 1, n))
        U[: 2 * k + 1, : 2 * k] = gen.regular_simplex(2 * k)
        U[2 * k + 1:, 2 * k:] = np.eye(n - 2 * k)
        out.append((k, U))
    return out


def signed_sum_norm(U, n, k):
    """Norm of the signed sum whose length the extremal configuration attains."""
    if n % 2 == 0:
        half = n // 2 + 1
        s = U[:half].sum(axis=0) - U[half:].sum(axis=0)
    else:
        s = U[: k + 1].sum(axis=0) - U[k + 1: 2 * k + 1].sum(axis=0) + U[2 * k + 1:].sum(axis=0)
    return float(np.linalg.norm(s))


def evaluate_candidate(U):
    sets = _pair_sets(U)
    c, value = minmax_center(sets)
    return c, value


def explore_n_plus_one(n, trials, seed):
    """Random balanced families and conjectured extremal configurations."""
    if n < 2:
        raise InputError("n must be at least 2")
    target = math.sqrt(n + 2)
    candidates = []
    for k, U in candidate_directions(n):
        c, value = evaluate_candidate(U)
        candidates.append({
            "k": k,
            "directions": U.tolist(),
            "minmax_value": value,
            "center": c.tolist(),
            "target": target,
            "slack": value - target,
            "signed_sum_norm": signed_sum_norm(U, n, k),
            "gram": (U @ U.T).tolist(),
        })

    records = []
    for t in range(trials):
        rng = gen.trial_rng(seed, t)
        sets = [
            random_balanced_set(n, 1.0, int(rng.integers(2, n + 2)), rng)
            for _ in range(n + 1)
        ]
        _, value = minmax_center(sets)
        records.append({
            "trial": t, "slack": value - target, "value": value,
            "sets": [s.to_dict() for s in sets],
        })

    violations = []
    for rec in records:
        if rec["slack"] < -EPS_FEAS:
            sets = [BalancedSet(s["vectors"], s["lambdas"], s["radius"]) for s in rec["sets"]]
            value2 = min_enclosing_ball(all_sums(sets), method="dual").radius
            if value2 - target < -EPS_FEAS:
                violations.append(dict(rec, reverified_slack=value2 - target))

    ranked = sorted(records, key=lambda r: (r["slack"], r["trial"]))
    return ConjectureReport(
        conjecture_tag="n_plus_one_sets",
        params={"n": n, "seed": seed},
        trials=trials,
        min_observed_slack=ranked[0]["slack"] if ranked else math.nan,
        argmin_trial=ranked[0]["trial"] if ranked else None,
        violations=violations,
        extremal_candidates=ranked[:N_EXTREMAL],
        extras={
            "target": target,
            "conjectured_extremals": candidates,
            "notes": [
                "a body-level bound R(K_1+...+K_{n+1}) >= sqrt(n+2) for unit bodies "
                "may follow from this conjecture; it is not checked here",
            ],
        },
    )


def verify_conjecture_report(report, tol=EPS_EQ):
    """Recompute every numeric claim embedded in an explorer report.

    Returns a list of failure strings (empty when everything re-verifies).
    """
    d = report.to_dict() if hasattr(report, "to_dict") else report
    failures = []
    if d["conjecture_tag"] == "n_plus_one_sets":
        n = d["params"]["n"]
        target = math.sqrt(n + 2)
        if abs(d["target"] - target) > tol:
            failures.append("target")
        for cand in d["conjectured_extremals"]:
            U = np.array(cand["directions"])
            _, value = evaluate_candidate(U)
            if abs(value - cand["minmax_value"]) > tol:
                failures.append(f"candidate k={cand['k']} minmax value")
            if abs(cand["slack"] - (value - target)) > tol:
                failures.append(f"candidate k={cand['k']} slack")
            if abs(signed_sum_norm(U, n, cand["k"]) - cand["signed_sum_norm"]) > tol:
                failures.append(f"candidate k={cand['k']} signed sum")
        for rec in d["extremal_candidates"]:
            sets = [BalancedSet(s["vectors"], s["lambdas"], s["radius"]) for s in rec["sets"]]
            _, value = minmax_center(sets)
            if abs(value - rec["value"]) > tol or abs(rec["slack"] - (value - target)) > tol:
                failures.append(f"trial {rec['trial']}")
    else:
        p = d["params"]["p"]
        p = math.inf if p == "inf" else float(p)
        for rec in d["extremal_candidates"]:
            bodies = [PointBody(b) for b in rec["bodies"]]
            slack, _, _ = _lp_slack(bodies, p)
            if abs(slack - rec["slack"]) > tol:
                failures.append(f"trial {rec['trial']}")
    if d["extremal_candidates"]:
        if abs(d["min_observed_slack"] - d["extremal_candidates"][0]["slack"]) > tol:
            failures.append("min_observed_slack")
    return failures
