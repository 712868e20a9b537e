"""
Circumradius under different gauges
===================================

The circumradius of K with respect to a gauge C is the smallest scale of
C that holds a translate of K. This walk-through computes it for one body
under several gauges and reads off the optimality certificate.
"""
import itertools
import math

import numpy as np

from radii import Gauge, PointBody, circumradius, verify_certificate
from radii.gauges import box_gauge

# The square [-1, 1]^2 as a point body
square = PointBody(list(itertools.product((-1.0, 1.0), repeat=2)))

# Its circumradius w.r.t. the l_p unit ball is 2^(1/p)
for p in (1, 2, 3, math.inf):
    res = circumradius(square, Gauge.lp(p))
    print(f"p = {p:>4}: radius {res.radius:.9f}  expected {2 ** (1 / p):.9f}  route {res.method}")

# A certificate: touch points of K on the boundary of center + radius * C,
# outer normals there, and positive weights balancing the normals to zero
res = circumradius(square, Gauge.lp(1), certificate=True)
cert = res.certificate
print("\ntouch points\n", cert.touch_points)
print("normals\n", cert.normals)
print("weights", cert.weights, " sum w_i u_i =", cert.weights @ cert.normals)
print("re-verified:", verify_certificate(square, Gauge.lp(1), res, cert).ok)

# A polytope gauge: the unit square translated so the origin is interior.
# The segment [0, e_1] needs the square at scale 1.
unit_square = box_gauge([-0.5, -0.5], [0.5, 0.5])
seg = PointBody([[0.0, 0.0], [1.0, 0.0]])
print("\nsegment in unit square:", circumradius(seg, unit_square).radius)

# A single point has radius zero and no certificate
print("single point:", circumradius(PointBody([[3.0, 4.0]]), certificate=True))

# Translating K moves the center and keeps the radius
shifted = circumradius(square.translate([5.0, -2.0]), Gauge.lp(3))
print("\ntranslated square, p = 3:", shifted.radius, shifted.center)
