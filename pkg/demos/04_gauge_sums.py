"""
Minkowski sums under a polytope gauge
=====================================

For a general gauge C the radii of the summands add up to at most j times
the radius of the sum. Two perpendicular unit segments in the unit square
reach this bound, and the equality comes with one strip per summand.
"""
from radii.harness import (
    check_cylinder_equality,
    check_factor_j_gauge,
    check_max_lower_bound,
    run_random,
)
from radii.harness import generators as gen
from radii.harness.reports import dumps

bodies, square = gen.segments_and_square()
rep = check_factor_j_gauge(bodies, square)
print("sum R(K_i, C) =", rep.lhs, "  j R(sum, C) =", rep.rhs, "  equality:", rep.equality_flag)
print("max R(K_i, C) <= R(sum, C):", check_max_lower_bound(bodies, square).passed)

verdict = check_cylinder_equality(bodies, square, rep)
print("\ncylinder verdict:", verdict["verdict"])
for cyl in verdict["cylinders"]:
    print("  strip", dumps(cyl))

# Random tuples with random polytope gauges
reports = run_random("factor_j", 100, seed=5)
print("\n100 random instances, all pass:", all(r.passed for r in reports),
      " smallest slack:", min(r.slack for r in reports))
