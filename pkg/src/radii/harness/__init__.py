"""Inequality suites, conjecture explorers and report records."""
from radii.harness.explore import (
    candidate_directions,
    explore_lp_conjecture,
    explore_n_plus_one,
    verify_conjecture_report,
)
from radii.harness.reports import SCHEMA, ConjectureReport, InstanceReport, dumps
from radii.harness.suites import (
    CHECKS,
    check_cylinder_equality,
    check_factor_j_gauge,
    check_max_lower_bound,
    check_planar_three,
    check_sqrt_j,
    check_sum_of_squares,
    random_instance,
    replay,
    run_check,
    run_random,
)

__all__ = [
    "CHECKS",
    "SCHEMA",
    "ConjectureReport",
    "InstanceReport",
    "candidate_directions",
    "check_cylinder_equality",
    "check_factor_j_gauge",
    "check_max_lower_bound",
    "check_planar_three",
    "check_sqrt_j",
    "check_sum_of_squares",
    "dumps",
    "explore_lp_conjecture",
    "explore_n_plus_one",
    "random_instance",
    "replay",
    "run_check",
    "run_random",
    "verify_conjecture_report",
]
