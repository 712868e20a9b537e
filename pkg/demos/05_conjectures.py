"""
Exploring two open conjectures
==============================

Nothing here is proven; the explorers look for counterexamples on random
instances and evaluate the conjectured extremal configurations.
"""
import math

from radii.harness import explore_lp_conjecture, explore_n_plus_one, verify_conjecture_report

# R(K_1 + ... + K_j, B_p) >= |(R(K_i, B_p))_i|_p for p in [2, inf]
for p in (2, 3, math.inf):
    rep = explore_lp_conjecture(2, p, trials=20 if p == 3 else 100, seed=1)
    print(f"p = {p}: min slack {rep.min_observed_slack:.3e}  violations {len(rep.violations)}")

# n + 1 balanced sets on the unit sphere: min_c max |sum - c| >= sqrt(n + 2)
for n in (2, 3, 4, 5):
    rep = explore_n_plus_one(n, trials=30, seed=1)
    values = [round(c["minmax_value"], 9) for c in rep.extras["conjectured_extremals"]]
    print(f"n = {n}: candidates {values}  sqrt(n+2) = {math.sqrt(n + 2):.9f}"
          f"  random min slack {rep.min_observed_slack:.3f}")
    assert verify_conjecture_report(rep) == []
