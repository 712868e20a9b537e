"""Numerical tolerances.

Two tiers: ``EPS_FEAS`` absorbs solver noise, ``EPS_CERT``/``EPS_EQ`` are used
for geometric decisions (boundary touching, equality cases).
"""

EPS_FEAS = 1e-9
EPS_CERT = 1e-7
EPS_EQ = 1e-6
EPS_POS = 1e-12

MAX_SUM_POINTS = 1_000_000
MAX_TUPLES = 1_000_000
