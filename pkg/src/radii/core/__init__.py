"""Numerical kernel: LP, enclosing balls, hull machinery, Minkowski sums."""
from radii.core.ball import Ball, min_enclosing_ball
from radii.core.bodies import HPolytope, PointBody, as_body, minkowski_sum
from radii.core.hull import (
    caratheodory_reduce,
    convex_weights,
    in_hull,
    separating_direction,
)
from radii.core.lp import LPSolution, solve_lp, solve_lp_arrays

__all__ = [
    "Ball",
    "HPolytope",
    "LPSolution",
    "PointBody",
    "as_body",
    "caratheodory_reduce",
    "convex_weights",
    "in_hull",
    "min_enclosing_ball",
    "minkowski_sum",
    "separating_direction",
    "solve_lp",
    "solve_lp_arrays",
]
