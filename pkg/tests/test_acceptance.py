"""Acceptance criteria, one test per criterion.

Each test records a one-line PASS/FAIL verdict; ``conftest.py`` prints the
lines at the end of the pytest run. Running this file directly
(``python3 tests/test_acceptance.py``) prints them as well.
"""
import contextlib
import json
import math
import os
import subprocess
import sys
import tempfile
import time

import numpy as np
import pytest

from radii import Gauge, circumradius, extract_certificate
from radii.colourful import (
    BalancedSet,
    all_sums,
    brute_force_max,
    detect_hexagon_equality,
    greedy_select,
    hexagon_sets,
    minmax_center,
    random_balanced_set,
)
from radii.core import PointBody, minkowski_sum
from radii.harness import (
    check_cylinder_equality,
    check_factor_j_gauge,
    check_sqrt_j,
    check_sum_of_squares,
    explore_lp_conjecture,
    explore_n_plus_one,
    random_instance,
    verify_conjecture_report,
)
from radii.harness import generators as gen
from radii.harness.reports import dumps
from radii.io import body_to_dict, sets_to_dict

RESULTS = {}


@contextlib.contextmanager
def criterion(number, label):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        RESULTS[number] = f"criterion {number:2d} FAIL  {label}: {exc!r}"[:300]
        raise
    RESULTS[number] = f"criterion {number:2d} PASS  {label} ({time.perf_counter() - start:.2f} s)"


def cube(n):
    return PointBody(np.array(np.meshgrid(*[[-1.0, 1.0]] * n)).reshape(n, -1).T)


CUBE_EXACT = [(n, p) for n in (2, 3) for p in (1.0, 2.0, math.inf)]
CUBE_ITER = [(n, 3.0) for n in (2, 3)]


def colourful_instances(count=1000, seed=2024):
    """Seeded random instances: n in {2,3,4}, j <= n, r_i in [0.5, 2], |c| <= 2."""
    out = []
    for i in range(count):
        rng = gen.trial_rng(seed, i)
        n = int(rng.integers(2, 5))
        j = int(rng.integers(1, n + 1))
        sets = [random_balanced_set(n, float(rng.uniform(0.5, 2.0)), int(rng.integers(2, n + 2)), rng)
                for _ in range(j)]
        c = rng.standard_normal(n)
        c *= rng.uniform(0.0, 2.0) / np.linalg.norm(c)
        out.append((sets, c))
    return out


def factor_j_instances(count=500, seed=77):
    return [random_instance("factor_j", seed, i, n_max=3, j_max=3) for i in range(count)]


def test_criterion_01_kite_pair():
    with criterion(1, "planar pair: R(K) = R(L) = 1, R(K+L) = sqrt 2, equality in both suites"):
        t0 = time.perf_counter()
        K, L = gen.kite_pair()
        assert abs(circumradius(K).radius - 1.0) <= 1e-6
        assert abs(circumradius(L).radius - 1.0) <= 1e-6
        assert abs(circumradius(minkowski_sum([K, L])).radius - math.sqrt(2)) <= 1e-6
        assert check_sqrt_j([K, L]).equality_flag
        assert check_sum_of_squares([K, L]).equality_flag
        assert time.perf_counter() - t0 < 1.0


def test_criterion_02_hexagon():
    with criterion(2, "hexagon pairs: minmax 2 at c* = 0, zero-sum tuple, detector +/- perturbation"):
        t0 = time.perf_counter()
        sets = hexagon_sets()
        c, value = minmax_center(sets)
        assert abs(value - 2.0) <= 1e-6
        assert np.linalg.norm(c) <= 1e-6
        assert abs(brute_force_max(sets, np.zeros(2)).achieved - 2.0) <= 1e-6
        # the tuple u^1_1 - u^2_1 + u^3_1 (indices 0, 1, 0) sums to zero
        sums = all_sums(sets).reshape(2, 2, 2, 2)
        assert np.linalg.norm(sums[0, 1, 0]) <= 1e-12
        assert detect_hexagon_equality(sets)
        u = sets[1].vectors[0] + np.array([1e-3, 0.0])
        u /= np.linalg.norm(u)
        bent = [sets[0], BalancedSet(np.vstack([u, -u]), [0.5, 0.5], 1.0), sets[2]]
        assert not detect_hexagon_equality(bent)
        assert time.perf_counter() - t0 < 1.0


def test_criterion_03_cube_identity():
    with criterion(3, "cube identity R([-1,1]^n, B_p) = n^(1/p)"):
        t0 = time.perf_counter()
        for n, p in CUBE_EXACT:
            res = circumradius(cube(n), Gauge.lp(p))
            assert res.exact
            assert abs(res.radius - n ** (1.0 / p)) <= 1e-6, (n, p, res.radius)
        for n, p in CUBE_ITER:
            res = circumradius(cube(n), Gauge.lp(p))
            assert abs(res.radius - n ** (1.0 / p)) <= 1e-4, (n, p, res.radius)
        assert time.perf_counter() - t0 < 5.0


def test_criterion_04_orthogonal_segments():
    with criterion(4, "axis segments: R(sum) = sqrt n, equality in both Euclidean suites"):
        for n in (2, 3, 4):
            bodies = gen.axis_segments(n)
            assert abs(circumradius(minkowski_sum(bodies)).radius - math.sqrt(n)) <= 1e-6
            assert check_sqrt_j(bodies).equality_flag
            assert check_sum_of_squares(bodies).equality_flag


def test_criterion_05_greedy_guarantee():
    with criterion(5, "greedy guarantee and brute-force dominance on 1000 instances"):
        t0 = time.perf_counter()
        violations = 0
        for sets, c in colourful_instances():
            g = greedy_select(sets, c)
            b = brute_force_max(sets, c)
            bound = float(c @ c) + sum(s.radius ** 2 for s in sets)
            violations += (g.achieved ** 2 < bound - 1e-6) + (b.achieved < g.achieved)
        assert violations == 0
        assert time.perf_counter() - t0 < 30.0


def test_criterion_06_minmax_bound():
    with criterion(6, "minmax value >= sqrt(sum r_i^2) on the 1000 instances at c = 0"):
        violations = 0
        for sets, _ in colourful_instances():
            _, value = minmax_center(sets)
            violations += value < math.sqrt(sum(s.radius ** 2 for s in sets)) - 1e-9
        assert violations == 0


def test_criterion_07_factor_j():
    with criterion(7, "factor-j gauge bound on 500 instances, segments-and-square cylinders"):
        t0 = time.perf_counter()
        failed = []
        for i, (bodies, C) in enumerate(factor_j_instances()):
            rep = check_factor_j_gauge(bodies, C)
            if rep.lhs > len(bodies) * rep.artifacts["sum_radius"] + 1e-9:
                failed.append(i)
        assert failed == []
        bodies, C = gen.segments_and_square()
        rep = check_factor_j_gauge(bodies, C)
        assert abs(rep.slack) <= 1e-9
        verdict = check_cylinder_equality(bodies, C, rep)
        assert verdict["verdict"] == "true"
        assert len(verdict["cylinders"]) == 2
        for cyl in verdict["cylinders"]:
            A = np.array(cyl["A"])
            # a strip: two opposite facet normals
            assert A.shape[0] == 2 and np.allclose(A[0], -A[1])
        assert time.perf_counter() - t0 < 60.0


def exact_cases():
    """Every (body, gauge) whose circumradius criteria 1-7 compute on an exact path."""
    K, L = gen.kite_pair()
    yield K, None
    yield L, None
    yield minkowski_sum([K, L]), None
    for n, p in CUBE_EXACT:
        yield cube(n), Gauge.lp(p)
    for n in (2, 3, 4):
        bodies = gen.axis_segments(n)
        yield from ((b, None) for b in bodies)
        yield minkowski_sum(bodies), None
    for sets, _ in colourful_instances():
        yield PointBody(all_sums(sets)), None
    yield PointBody(all_sums(hexagon_sets())), None
    for bodies, C in factor_j_instances():
        yield from ((b, C) for b in bodies)
        yield minkowski_sum(bodies), C
    bodies, C = gen.segments_and_square()
    yield from ((b, C) for b in bodies)
    yield minkowski_sum(bodies), C


def certificate_problems(K, C):
    C = Gauge.euclidean() if C is None else C
    res = circumradius(K, C)
    assert res.exact
    if res.radius == 0:
        return []
    cert = extract_certificate(K, C, res)
    T, U, w = cert.touch_points, cert.normals, cert.weights
    n = K.dim
    problems = []
    if not 2 <= len(w) <= n + 1:
        problems.append(f"support size {len(w)}")
    if np.any(w <= 0):
        problems.append("nonpositive weight")
    if np.abs(w @ U).max() > 1e-7:
        problems.append(f"balance residual {np.abs(w @ U).max():.2e}")
    gam = C((T - res.center) / res.radius)
    if np.abs(gam - 1.0).max() > 1e-7:
        problems.append(f"boundary error {np.abs(gam - 1.0).max():.2e}")
    for t in T:
        if np.abs(K.points - t).max(axis=1).min() > 1e-9:
            problems.append("touch point not in body")
    if np.max(K.points @ U.T - np.sum(T * U, axis=1)) > 1e-7 * max(1.0, np.abs(U).max()):
        problems.append("normal does not support the body")
    return problems


def test_criterion_08_certificates():
    with criterion(8, "certificates of every exact-path circumradius in criteria 1-7 re-verify"):
        bad, count = [], 0
        for K, C in exact_cases():
            count += 1
            probs = certificate_problems(K, C)
            if probs:
                bad.append((count, probs))
        assert bad == [], bad[:5]


def test_criterion_09_explorers():
    with criterion(9, "explorers: theorem-backed lp cases, n+1 candidates, determinism, re-verification"):
        for p in (2.0, math.inf):
            for n in (2, 3):
                rep = explore_lp_conjecture(n, p, trials=200, seed=9)
                assert rep.min_observed_slack >= -1e-6, (n, p, rep.min_observed_slack)
                assert rep.violations == []
        rep2 = explore_n_plus_one(2, trials=50, seed=9)
        cand = rep2.extras["conjectured_extremals"][0]
        assert abs(cand["minmax_value"] - 2.0) <= 1e-6
        rep3 = explore_n_plus_one(3, trials=50, seed=9)
        cands = rep3.extras["conjectured_extremals"]
        assert cands and all("minmax_value" in c for c in cands)
        assert abs(cands[0]["target"] - math.sqrt(5)) <= 1e-12
        assert dumps(rep3) == dumps(explore_n_plus_one(3, trials=50, seed=9))
        for rep in (rep2, rep3):
            assert verify_conjecture_report(rep) == []
            assert verify_conjecture_report(json.loads(dumps(rep))) == []


def cli_invocations(tmp):
    def put(name, obj):
        path = os.path.join(tmp, name)
        with open(path, "w") as fh:
            json.dump(obj, fh)
        return path

    K, L = gen.kite_pair()
    k = put("K.json", body_to_dict(K))
    kl = put("KL.json", body_to_dict(minkowski_sum([K, L])))
    c3 = put("cube3.json", body_to_dict(cube(3)))
    pair = put("pair.json", {"instances": [{"bodies": [body_to_dict(K), body_to_dict(L)]}]})
    axes = put("axes.json", {"instances": [{"bodies": [body_to_dict(b) for b in gen.axis_segments(n)]}
                                           for n in (2, 3, 4)]})
    hexa = put("hex.json", sets_to_dict(hexagon_sets()))
    bodies, C = gen.segments_and_square()
    sq = put("square.json", C.to_dict())
    seg = put("seg.json", {"instances": [{"bodies": [body_to_dict(b) for b in bodies]}]})
    runs = [
        ["circumradius", "--body", k, "--certificate"],
        ["circumradius", "--body", kl, "--certificate"],
        ["select", "--sets", hexa, "--mode", "minmax"],
        ["select", "--sets", hexa, "--mode", "brute"],
        ["check", "--suite", "sqrt-j", "--instances", pair],
        ["check", "--suite", "squares", "--instances", axes],
        ["check", "--suite", "factor-j", "--instances", seg, "--gauge", sq],
        ["check", "--suite", "factor-j", "--random", "50", "--seed", "77"],
        ["explore", "--conjecture", "lp", "--n", "2", "--p", "inf", "--trials", "50", "--seed", "9"],
        ["explore", "--conjecture", "n-plus-one", "--n", "3", "--trials", "20", "--seed", "9"],
    ]
    for p in (1.0, 2.0, "inf", 3.0):
        gauge = put(f"lp{p}.json", {"type": "lp", "p": p})
        runs.append(["circumradius", "--body", c3, "--gauge", gauge, "--certificate"])
    return runs


def test_criterion_10_cli_determinism():
    with criterion(10, "CLI invocations are byte-identical across repeated runs"):
        with tempfile.TemporaryDirectory() as tmp:
            for argv in cli_invocations(tmp):
                cmd = [sys.executable, "-m", "radii"] + argv
                a = subprocess.run(cmd, capture_output=True)
                b = subprocess.run(cmd, capture_output=True)
                assert a.returncode == 0, (argv, a.stdout, a.stderr)
                assert a.stdout == b.stdout, argv
                assert a.stdout.strip()


if __name__ == "__main__":
    code = pytest.main([__file__, "-q", "-p", "no:cacheprovider"])
    sys.exit(code)
