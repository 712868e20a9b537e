"""Gauge bodies: Euclidean ball, l_p balls and H-polytopes."""
import itertools
import math

import numpy as np

from radii.core.bodies import HPolytope
from radii.errors import InputError


class Gauge:
    """A convex body ``C`` with the origin in its interior, used as unit ball.

    Build with :meth:`euclidean`, :meth:`lp` or :meth:`polytope`.
    """

    __slots__ = ("kind", "p", "hpoly")

    def __init__(self, kind, p=None, hpoly=None):
        if kind not in ("euclidean", "lp", "polytope"):
            raise InputError(f"unknown gauge kind {kind!r}")
        if kind == "lp":
            p = float(p)
            if math.isnan(p) or p < 1.0:
                raise InputError(f"l_p gauge needs p >= 1, got {p}")
        if kind == "polytope" and not isinstance(hpoly, HPolytope):
            raise InputError("polytope gauge needs an HPolytope")
        self.kind = kind
        self.p = p
        self.hpoly = hpoly

    @classmethod
    def euclidean(cls):
        return cls("euclidean")

    @classmethod
    def lp(cls, p):
        if isinstance(p, str) and p.lower() in ("inf", "infinity"):
            p = math.inf
        return cls("lp", p=p)

    @classmethod
    def polytope(cls, A, b=None):
        return cls("polytope", hpoly=HPolytope(A, b))

    def __repr__(self):
        if self.kind == "lp":
            return f"Gauge.lp({self.p})"
        if self.kind == "polytope":
            return f"Gauge.polytope({self.hpoly!r})"
        return "Gauge.euclidean()"

    @property
    def dim(self):
        """Fixed dimension, or ``None`` for dimension-free gauges."""
        return self.hpoly.dim if self.kind == "polytope" else None

    @property
    def is_euclidean(self):
        return self.kind == "euclidean" or (self.kind == "lp" and self.p == 2.0)

    @property
    def is_polyhedral(self):
        return self.kind == "polytope" or (self.kind == "lp" and self.p in (1.0, math.inf))

    def facets(self, n):
        """Normalised facet normals (``A x <= 1``) of a polyhedral gauge in R^n."""
        if self.kind == "polytope":
            return self.hpoly.A
        if self.kind == "lp" and self.p == math.inf:
            return np.vstack([np.eye(n), -np.eye(n)])
        if self.kind == "lp" and self.p == 1.0:
            return np.array(list(itertools.product((1.0, -1.0), repeat=n)))
        raise InputError(f"{self!r} is not polyhedral")

    def __call__(self, x):
        """Minkowski functional, vectorised over the rows of ``x``."""
        x = np.atleast_2d(np.asarray(x, dtype=float))
        if self.kind == "euclidean":
            return np.linalg.norm(x, axis=1)
        if self.kind == "lp":
            return np.linalg.norm(x, ord=self.p, axis=1)
        return self.hpoly.gauge(x)

    def to_dict(self):
        if self.kind == "euclidean":
            return {"type": "euclidean"}
        if self.kind == "lp":
            return {"type": "lp", "p": "inf" if self.p == math.inf else self.p}
        return {"type": "hpoly", "A": self.hpoly.A.tolist(), "b": self.hpoly.b.tolist()}

    @classmethod
    def from_dict(cls, d):
        if not isinstance(d, dict) or "type" not in d:
            raise InputError("gauge must be an object with a 'type' field")
        kind = d["type"]
        if kind == "euclidean":
            return cls.euclidean()
        if kind == "lp":
            if "p" not in d:
                raise InputError("lp gauge needs 'p'")
            p = d["p"]
            if isinstance(p, str):
                if p.lower() != "inf":
                    raise InputError(f"p must be a number or \"inf\", got {p!r}")
                p = math.inf
            elif isinstance(p, bool) or not isinstance(p, (int, float)):
                raise InputError(f"p must be a number or \"inf\", got {p!r}")
            return cls.lp(p)
        if kind == "hpoly":
            if "A" not in d or "b" not in d:
                raise InputError("hpoly gauge needs 'A' and 'b'")
            try:
                A = np.array(d["A"], dtype=float)
                b = np.array(d["b"], dtype=float)
            except (TypeError, ValueError):
                raise InputError("hpoly 'A' and 'b' must be numeric")
            return cls.polytope(A, b)
        raise InputError(f"unknown gauge type {kind!r}")


def box_gauge(lo, hi):
    """Polytope gauge ``prod [lo_k, hi_k]``; the box must contain 0 in its interior."""
    lo = np.asarray(lo, dtype=float)
    hi = np.asarray(hi, dtype=float)
    n = lo.size
    A = np.vstack([np.eye(n), -np.eye(n)])
    b = np.concatenate([hi, -lo])
    return Gauge.polytope(A, b)
