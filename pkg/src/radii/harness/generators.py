"""Seeded random instances for the inequality suites and explorers.

Every generator takes a ``numpy.random.Generator``; callers derive it from
``(seed, instance_id)`` so trials are reproducible in any order.
"""
import math

import numpy as np

from radii.colourful import random_balanced_set
from radii.core.bodies import PointBody
from radii.gauges import Gauge


def trial_rng(seed, instance_id):
    return np.random.default_rng([int(seed), int(instance_id)])


def random_orthonormal(rng, n):
    Q, R = np.linalg.qr(rng.standard_normal((n, n)))
    return Q * np.sign(np.diag(R))


def random_body(rng, n, k_range=(3, 8)):
    k = int(rng.integers(k_range[0], k_range[1] + 1))
    return PointBody(rng.uniform(0.0, 1.0, size=(k, n)))


def random_bodies(rng, n, j, orthogonal_prob=0.2, k_range=(3, 8)):
    """``j`` random bodies in the unit cube of R^n.

    With probability ``orthogonal_prob`` (and ``j <= n``) each body is
    instead drawn inside its own block of a random orthonormal basis, so the
    bodies lie in mutually orthogonal linear subspaces (the equality case of
    the Euclidean bounds).
    """
    if j <= n and rng.random() < orthogonal_prob:
        Q = random_orthonormal(rng, n)
        cuts = np.sort(rng.choice(np.arange(1, n), size=j - 1, replace=False)) if j > 1 else []
        blocks = np.split(np.arange(n), cuts)
        out = []
        for blk in blocks:
            k = int(rng.integers(k_range[0], k_range[1] + 1))
            coeffs = rng.uniform(-1.0, 1.0, size=(k, blk.size))
            out.append(PointBody(coeffs @ Q[:, blk].T))
        return out
    return [random_body(rng, n, k_range) for _ in range(j)]


def regular_simplex(d):
    """``d + 1`` unit vectors in R^d with pairwise inner products ``-1/d``."""
    E = np.eye(d + 1) - 1.0 / (d + 1)
    # orthonormal basis of the hyperplane sum(x) = 0
    Q, _ = np.linalg.qr(E[:, :d])
    V = E @ Q
    return V / np.linalg.norm(V, axis=1)[:, None]


def random_hpoly_gauge(rng, n, extra=(0, 4)):
    """Random polytope gauge: a rotated regular simplex (so it is bounded)
    plus a few random facets, with right-hand sides in [0.5, 1.5]."""
    if n == 1:
        A = np.array([[1.0], [-1.0]])
    else:
        A = regular_simplex(n) @ random_orthonormal(rng, n).T
    m_extra = int(rng.integers(extra[0], extra[1] + 1))
    if m_extra:
        R = rng.standard_normal((m_extra, n))
        A = np.vstack([A, R / np.linalg.norm(R, axis=1)[:, None]])
    b = rng.uniform(0.5, 1.5, size=A.shape[0])
    return Gauge.polytope(A, b)


def random_unit_planar_body(rng):
    """Planar body inside the unit disk with Euclidean circumradius exactly 1.

    Boundary points form a random balanced set on the unit circle (so the
    unit disk is the enclosing ball); a few interior points are added.
    """
    k = int(rng.integers(2, 4))
    touch = random_balanced_set(2, 1.0, k, rng).vectors
    m = int(rng.integers(0, 5))
    ang = rng.uniform(0.0, 2.0 * math.pi, size=m)
    rad = 0.95 * np.sqrt(rng.uniform(0.0, 1.0, size=m))
    inner = np.column_stack([rad * np.cos(ang), rad * np.sin(ang)])
    return PointBody(np.vstack([touch, inner]))


def segment(u):
    u = np.asarray(u, dtype=float)
    return PointBody(np.vstack([u, -u]))


def axis_segments(n):
    """``[-e_i, e_i]`` for ``i = 1..n``."""
    return [segment(e) for e in np.eye(n)]


def kite_pair():
    """The non-orthogonal planar pair with radii 1, 1 and sum radius sqrt(2)."""
    s = math.sqrt(2.0) - 1.0
    K = PointBody([[1.0, 0.0], [-1.0, 0.0], [0.0, s], [0.0, -s]])
    L = PointBody([[0.0, 1.0], [0.0, -1.0], [s, 0.0], [-s, 0.0]])
    return K, L


def hexagon_segments():
    return [segment([math.cos(i * math.pi / 3), math.sin(i * math.pi / 3)]) for i in (1, 2, 3)]


def unit_square_gauge():
    """``[0, 1]^2`` translated by ``-(1/2, 1/2)`` so the origin is interior."""
    return Gauge.polytope(np.vstack([np.eye(2), -np.eye(2)]), [0.5, 0.5, 0.5, 0.5])


def segments_and_square():
    return [PointBody([[0.0, 0.0], [1.0, 0.0]]), PointBody([[0.0, 0.0], [0.0, 1.0]])], unit_square_gauge()
