"""Circumradii of convex bodies under gauge bodies, colourful Carathéodory
selection, and inequalities for circumradii of Minkowski sums."""
from radii.circum import (
    Certificate,
    CircumResult,
    check_condition_4,
    circumradius,
    extract_certificate,
    verify_certificate,
)
from radii.colourful import (
    BalancedSet,
    SelectionResult,
    brute_force_max,
    detect_hexagon_equality,
    detect_orthogonal_equality,
    greedy_select,
    minmax_center,
    random_balanced_set,
)
from radii.core import (
    Ball,
    HPolytope,
    LPSolution,
    PointBody,
    caratheodory_reduce,
    min_enclosing_ball,
    minkowski_sum,
    solve_lp,
)
from radii.gauges import Gauge

__version__ = "0.1.0"

__all__ = [
    "Ball",
    "BalancedSet",
    "Certificate",
    "CircumResult",
    "Gauge",
    "HPolytope",
    "LPSolution",
    "PointBody",
    "SelectionResult",
    "brute_force_max",
    "caratheodory_reduce",
    "check_condition_4",
    "circumradius",
    "detect_hexagon_equality",
    "detect_orthogonal_equality",
    "extract_certificate",
    "greedy_select",
    "min_enclosing_ball",
    "minkowski_sum",
    "minmax_center",
    "random_balanced_set",
    "solve_lp",
    "verify_certificate",
]
