"""
Circumradii of Minkowski sums
=============================

For Euclidean circumradii the squares add up to a lower bound on the
circumradius of the sum, which also gives a sqrt(j) factor for plain
sums. Orthogonal segments attain both bounds. So does the non-orthogonal
planar pair built below.
"""
import math

from radii import circumradius, minkowski_sum
from radii.harness import check_sqrt_j, check_sum_of_squares, random_instance
from radii.harness import generators as gen

K, L = gen.kite_pair()
print("R(K)   =", circumradius(K).radius)
print("R(L)   =", circumradius(L).radius)
print("R(K+L) =", circumradius(minkowski_sum([K, L])).radius, " sqrt 2 =", math.sqrt(2))

for check in (check_sqrt_j, check_sum_of_squares):
    rep = check([K, L])
    print(f"{rep.theorem_tag:>15}: lhs {rep.lhs:.9f}  rhs {rep.rhs:.9f}  equality {rep.equality_flag}")

# Segments [-e_i, e_i] are mutually orthogonal: again equality
for n in (2, 3, 4):
    rep = check_sum_of_squares(gen.axis_segments(n))
    print(f"n = {n}: sum R_i^2 = {rep.lhs:.6f}, R(sum)^2 = {rep.rhs:.6f}, equality {rep.equality_flag}")

# Random bodies stay on the right side of both bounds
slacks = [check_sqrt_j(random_instance("sqrt_j", 1, i)[0]).slack for i in range(200)]
print("\nsmallest sqrt-j slack over 200 random tuples:", min(slacks))
