import io
import itertools
import json
import math

import numpy as np
import pytest

from radii.core import PointBody, min_enclosing_ball
from radii.errors import InputError
from radii.gauges import Gauge
from radii.harness import (
    SCHEMA,
    InstanceReport,
    check_cylinder_equality,
    check_factor_j_gauge,
    check_max_lower_bound,
    check_planar_three,
    check_sqrt_j,
    check_sum_of_squares,
    random_instance,
    replay,
    run_random,
)
from radii.harness import generators as gen
from radii.harness.reports import clean, read_ndjson, write_ndjson


def sum_points(bodies):
    """Oracle Minkowski sum by explicit tuple enumeration."""
    return np.array([sum(p) for p in itertools.product(*[b.points for b in bodies])])


def test_kite_pair_is_equality_in_both_euclidean_suites():
    K, L = gen.kite_pair()
    for check, value in ((check_sqrt_j, 2.0), (check_sum_of_squares, 2.0)):
        rep = check([K, L])
        assert rep.lhs == pytest.approx(value) and rep.rhs == pytest.approx(value)
        assert rep.passed and rep.equality_flag


@pytest.mark.parametrize("n", [2, 3, 4])
def test_axis_segments_equality(n):
    bodies = gen.axis_segments(n)
    rep = check_sqrt_j(bodies)
    assert rep.lhs == pytest.approx(n) and rep.rhs == pytest.approx(n)
    assert rep.artifacts["sum_radius"] == pytest.approx(math.sqrt(n))
    assert rep.equality_flag
    assert check_sum_of_squares(bodies).equality_flag


def test_segments_and_square_equality_and_cylinders():
    bodies, C = gen.segments_and_square()
    rep = check_factor_j_gauge(bodies, C)
    assert rep.lhs == pytest.approx(2.0) and rep.rhs == pytest.approx(2.0)
    assert abs(rep.slack) <= 1e-9 and rep.equality_flag
    mx = check_max_lower_bound(bodies, C)
    assert mx.lhs == pytest.approx(1.0) and mx.rhs == pytest.approx(1.0)
    verdict = check_cylinder_equality(bodies, C, rep)
    assert verdict["verdict"] == "true"
    normals = sorted(tuple(np.sign(np.round(a, 9))) for cyl in verdict["cylinders"] for a in cyl["A"])
    # one vertical strip (normals +-e_1) and one horizontal strip (normals +-e_2)
    assert normals == [(-1, 0), (0, -1), (0, 1), (1, 0)]
    assert all(len(cyl["A"]) == 2 for cyl in verdict["cylinders"])


def test_cylinder_check_preconditions():
    bodies, C = gen.segments_and_square()
    tilted = [PointBody([[0, 0], [math.cos(0.1), math.sin(0.1)]]), bodies[1]]
    rep = check_factor_j_gauge(tilted, C)
    assert not rep.equality_flag
    with pytest.raises(InputError):
        check_cylinder_equality(tilted, C, rep)


def test_single_body_and_singleton_cases():
    C = gen.unit_square_gauge()
    K = PointBody([[0.1, 0.2], [0.7, -0.3], [0.0, 0.9]])
    assert check_factor_j_gauge([K], C).equality_flag
    rep = check_max_lower_bound([K, PointBody([[0.3, 0.3]])], C)
    assert rep.lhs == pytest.approx(rep.rhs, abs=1e-12)


def test_planar_three_cases():
    rep = check_planar_three(gen.hexagon_segments())
    assert rep.rhs == pytest.approx(2.0) and rep.equality_flag
    assert rep.artifacts["hexagon_equality"] is True
    assert rep.artifacts["contains_segment"] == [True, True, True]

    tri = np.array([[math.cos(a), math.sin(a)] for a in (0, 2 * math.pi / 3, 4 * math.pi / 3)])
    rots = [PointBody(tri @ gen.random_orthonormal(np.random.default_rng(i), 2).T) for i in range(3)]
    assert check_planar_three(rots).rhs >= 2 - 1e-9

    same = [gen.segment([1, 0])] * 3
    rep = check_planar_three(same)
    assert rep.rhs == pytest.approx(3.0)


def test_planar_three_preconditions():
    small = PointBody([[0.9, 0.0], [-0.9, 0.0]])
    with pytest.raises(InputError, match="body 1"):
        check_planar_three([gen.segment([1, 0]), small, gen.segment([0, 1])])
    far = PointBody([[1.0, 0.5], [-1.0, 0.5]])
    with pytest.raises(InputError, match="body 0"):
        check_planar_three([far, gen.segment([1, 0]), gen.segment([0, 1])])


@pytest.mark.parametrize("tag", ["sqrt_j", "sum_of_squares", "factor_j", "max_bound", "planar_three"])
def test_random_suites_pass_and_replay(tag):
    reports = run_random(tag, 40, seed=3)
    assert all(r.passed for r in reports)
    for r in reports[:10]:
        lhs, rhs = replay(json.loads(json.dumps(clean(r.to_dict()))))
        assert lhs == pytest.approx(r.lhs, abs=1e-9)
        assert rhs == pytest.approx(r.rhs, abs=1e-9)


def test_euclidean_report_matches_oracle():
    for i in range(20):
        bodies, _ = random_instance("sqrt_j", 12, i)
        rep = check_sqrt_j(bodies)
        radii = [min_enclosing_ball(b, "dual").radius for b in bodies]
        R = min_enclosing_ball(sum_points(bodies), "dual").radius
        assert rep.lhs == pytest.approx(sum(radii), abs=1e-9)
        assert rep.rhs == pytest.approx(math.sqrt(len(bodies)) * R, abs=1e-9)


def test_squares_imply_sqrt_j_for_equal_radii():
    rng = np.random.default_rng(4)
    for _ in range(20):
        n = int(rng.integers(1, 4))
        j = int(rng.integers(1, 4))
        bodies = [b.scale(1.0 / max(min_enclosing_ball(b).radius, 1e-12))
                  for b in gen.random_bodies(rng, n, j)]
        if check_sum_of_squares(bodies).passed:
            assert check_sqrt_j(bodies).passed


def test_random_instances_are_seeded():
    a, _ = random_instance("sqrt_j", 5, 7)
    b, _ = random_instance("sqrt_j", 5, 7)
    assert all(x == y for x, y in zip(a, b))


def test_ndjson_round_trip():
    rep = check_sqrt_j(gen.axis_segments(2), instance_id=3, seed=9)
    buf = io.StringIO()
    write_ndjson([rep, rep], buf)
    lines = buf.getvalue().splitlines()
    assert len(lines) == 2
    rec = read_ndjson(io.StringIO(buf.getvalue()))[0]
    assert rec["schema"] == SCHEMA and rec["pass"] is True
    back = InstanceReport.from_dict(rec)
    assert back.instance_id == 3 and back.equality_flag
    assert clean(math.inf) == "inf" and clean(1.0 / 3.0) == 0.333333333333


def test_gauge_required_for_gauge_suites():
    from radii.harness import run_check
    with pytest.raises(InputError):
        run_check("factor_j", gen.axis_segments(2))
    with pytest.raises(InputError):
        run_check("nope", gen.axis_segments(2))
    with pytest.raises(InputError):
        check_sqrt_j([PointBody([[0.0]]), PointBody([[0.0, 1.0]])])
