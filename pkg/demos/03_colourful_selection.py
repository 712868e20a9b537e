"""
Colourful selection from balanced sets
======================================

Each balanced set is a family of vectors on a sphere whose convex hull
contains the origin. Picking one vector per set, some choice has
|sum - c|^2 >= |c|^2 + sum r_i^2. The greedy rule finds such a choice;
brute force finds the best one.
"""
import numpy as np

from radii.colourful import (
    BalancedSet,
    brute_force_max,
    detect_hexagon_equality,
    detect_orthogonal_equality,
    greedy_select,
    hexagon_sets,
    minmax_center,
    orthonormal_pair_sets,
    random_balanced_set,
)
from radii.errors import NotInHullError

rng = np.random.default_rng(0)
sets = [random_balanced_set(3, r, k, rng) for r, k in ((1.0, 4), (0.5, 2), (2.0, 3))]
c = np.array([0.3, -1.0, 0.5])

g = greedy_select(sets, c)
b = brute_force_max(sets, c)
print("greedy indices", g.indices, "achieved", round(g.achieved, 6), "guarantee", round(g.guarantee, 6))
print("brute  indices", b.indices, "achieved", round(b.achieved, 6))

# Weights can be solved for; a one-sided family is rejected with a separator
tri = np.array([[1.0, 0.0], [-1.0, 1.0], [-1.0, -1.0]])
tri /= np.linalg.norm(tri, axis=1)[:, None]
print("\nsolved weights:", BalancedSet.from_vectors(tri).lambdas)
try:
    BalancedSet.from_vectors([[1.0, 0.0], [0.0, 1.0]])
except NotInHullError as exc:
    print("one-sided family:", exc, "separator", exc.separator)

# Best center for the worst case: orthogonal pairs give sqrt(3) ...
print("\northonormal pairs:", minmax_center(orthonormal_pair_sets(3))[1],
      "orthogonal equality:", detect_orthogonal_equality(orthonormal_pair_sets(3)))

# ... while three planar pairs at 60 degrees give exactly 2
hexa = hexagon_sets()
center, value = minmax_center(hexa)
print("hexagon pairs:", value, "at", center, "hexagon equality:", detect_hexagon_equality(hexa))
