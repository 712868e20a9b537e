"""Command-line front end: ``radii circumradius | select | check | explore``.

stdout carries only JSON (or NDJSON for ``check``); human diagnostics go to
stderr. Exit codes: 0 ok, 1 a check failed, 2 invalid input, 3 solver
failure, 4 budget exceeded.
"""
import argparse
import math
import os
import sys

from radii import io
from radii.circum import circumradius
from radii.colourful import brute_force_max, greedy_select, guarantee, minmax_center
from radii.errors import (
    BudgetError,
    InputError,
    InvariantViolation,
    NotInHullError,
    RadiiError,
    SolverFailure,
)
from radii.gauges import Gauge
from radii.harness import explore, suites
from radii.harness.reports import dumps
from radii.tolerances import MAX_SUM_POINTS

SUITE_NAMES = {
    "sqrt-j": "sqrt_j",
    "squares": "sum_of_squares",
    "factor-j": "factor_j",
    "max-bound": "max_bound",
    "planar-three": "planar_three",
}


def max_sum_points():
    raw = os.environ.get("RADII_MAX_SUM_POINTS")
    if raw is None:
        return MAX_SUM_POINTS
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"RADII_MAX_SUM_POINTS must be an integer, got {raw!r}")
    if value < 1:
        raise InputError("RADII_MAX_SUM_POINTS must be positive")
    return value


def _emit(obj, out):
    out.write(dumps(obj))
    out.write("\n")


def cmd_circumradius(args, out):
    body = io.body_from_dict(io.load_file(args.body))
    gauge = Gauge.from_dict(io.load_file(args.gauge)) if args.gauge else Gauge.euclidean()
    res = circumradius(body, gauge, certificate=args.certificate)
    record = {"radius": res.radius, "center": res.center, "method": res.method}
    if args.certificate:
        record["certificate"] = res.certificate.to_dict() if res.certificate else None
    _emit(record, out)
    return 0


def cmd_select(args, out):
    sets, c = io.sets_from_dict(io.load_file(args.sets))
    cap = max_sum_points()
    if args.mode == "minmax":
        center, value = minmax_center(sets, max_tuples=cap)
        _emit({"mode": "minmax", "center": center, "value": value,
               "guarantee": guarantee(sets)}, out)
        return 0
    sel = greedy_select(sets, c) if args.mode == "greedy" else brute_force_max(sets, c, max_tuples=cap)
    _emit({"mode": args.mode, "indices": list(sel.indices), "achieved": sel.achieved,
           "guarantee": sel.guarantee}, out)
    return 0


def cmd_check(args, out):
    tag = SUITE_NAMES[args.suite]
    cap = max_sum_points()
    gauge = Gauge.from_dict(io.load_file(args.gauge)) if args.gauge else None
    if args.instances:
        instances = io.instances_from_obj(io.load_file(args.instances))
        jobs = [(bodies, g or gauge) for bodies, g in instances]
        seed = None
    else:
        seed = args.seed
        jobs = [
            suites.random_instance(tag, seed, i, args.n_max, args.j_max, gauge)
            for i in range(args.random)
        ]
    reports = [
        suites.run_check(tag, bodies, g, max_points=cap, instance_id=i, seed=seed)
        for i, (bodies, g) in enumerate(jobs)
    ]
    for r in reports:
        _emit(r, out)
    failed = [r.instance_id for r in reports if not r.passed]
    if failed:
        print(f"{len(failed)} of {len(reports)} instances failed: {failed}", file=sys.stderr)
        return 1
    return 0


def _parse_p(text):
    if text.lower() in ("inf", "infinity"):
        return math.inf
    try:
        return float(text)
    except ValueError:
        raise InputError(f"p must be a number or 'inf', got {text!r}")


def cmd_explore(args, out):
    if args.conjecture == "lp":
        p = _parse_p(args.p)
        report = explore.explore_lp_conjecture(args.n, p, args.trials, args.seed)
    else:
        report = explore.explore_n_plus_one(args.n, args.trials, args.seed)
    _emit(report, out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="radii",
        description="Circumradii under gauge bodies, colourful selection, and Minkowski-sum bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("circumradius", help="circumradius of a body w.r.t. a gauge")
    p.add_argument("--body", required=True, help="body JSON file")
    p.add_argument("--gauge", help="gauge JSON file (default: Euclidean ball)")
    p.add_argument("--certificate", action="store_true", help="attach an optimality certificate")
    p.set_defaults(func=cmd_circumradius)

    p = sub.add_parser("select", help="colourful selection on balanced sets")
    p.add_argument("--sets", required=True, help="sets JSON file")
    p.add_argument("--mode", choices=("greedy", "brute", "minmax"), default="greedy")
    p.set_defaults(func=cmd_select)

    p = sub.add_parser("check", help="run an inequality suite, one NDJSON report per instance")
    p.add_argument("--suite", required=True, choices=sorted(SUITE_NAMES))
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--instances", help="instances JSON file")
    src.add_argument("--random", type=int, metavar="N", help="number of random instances")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--gauge", help="gauge JSON file for factor-j / max-bound")
    p.add_argument("--n-max", type=int, default=3, help="max dimension of random instances")
    p.add_argument("--j-max", type=int, default=3, help="max body count of random instances")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("explore", help="numeric exploration of an open conjecture")
    p.add_argument("--conjecture", required=True, choices=("lp", "n-plus-one"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", default="2", help="l_p exponent in [2, inf] (lp only)")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_explore)
    return parser


def _error(exc, out, code):
    record = {"type": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, NotInHullError):
        record["separator"] = exc.separator
        record["gap"] = exc.gap
    _emit({"error": record}, out)
    print(f"radii: error: {exc}", file=sys.stderr)
    return code


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (InputError, InvariantViolation) as exc:
        return _error(exc, out, 2)
    except SolverFailure as exc:
        return _error(exc, out, 3)
    except BudgetError as exc:
        return _error(exc, out, 4)
    except RadiiError as exc:
        return _error(exc, out, 2)


if __name__ == "__main__":
    sys.exit(main())
