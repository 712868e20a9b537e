"""JSON file formats: bodies, gauges, balanced-set families, instance lists."""
import json
import re

import numpy as np

from radii.colourful import BalancedSet
from radii.core.bodies import PointBody
from radii.errors import InputError
from radii.gauges import Gauge

# JSON string literals, or the non-finite constants Python's json accepts
_TOKEN = re.compile(r'"(?:[^"\\]|\\.)*"|-?Infinity|NaN|-?\d+(?:\.\d+)?(?:[eE][+-]?\d+)?')


def _locate_nonfinite(text):
    for m in _TOKEN.finditer(text):
        tok = m.group(0)
        if tok.startswith('"'):
            continue
        if tok in ("NaN", "Infinity", "-Infinity") or not np.isfinite(float(tok)):
            line = text.count("\n", 0, m.start()) + 1
            col = m.start() - (text.rfind("\n", 0, m.start()) + 1) + 1
            return tok, line, col
    return None


def loads(text, what="input"):
    """Parse JSON, rejecting NaN/Infinity (and overflowing literals) with a position."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{what}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}")
    bad = _locate_nonfinite(text)
    if bad is not None:
        tok, line, col = bad
        raise InputError(f"{what}: non-finite number {tok} at line {line} column {col}")
    return obj


def load_file(path, what=None):
    what = what or str(path)
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}")
    return loads(text, what)


def body_from_dict(d):
    if not isinstance(d, dict) or "points" not in d:
        raise InputError("body must be an object with 'points'")
    try:
        pts = np.array(d["points"], dtype=float)
    except (TypeError, ValueError):
        raise InputError("body points must be a rectangular array of numbers")
    if pts.ndim != 2:
        raise InputError("body points must be a list of coordinate lists")
    if "dim" in d and pts.shape[1] != d["dim"]:
        raise InputError(f"body declares dim {d['dim']} but points have dimension {pts.shape[1]}")
    return PointBody(pts)


def body_to_dict(body):
    return {"dim": body.dim, "points": body.points.tolist()}


def sets_from_dict(d):
    """Parse a sets file into ``(sets, c)``; missing lambdas are solved for."""
    if not isinstance(d, dict) or "sets" not in d:
        raise InputError("sets file must be an object with 'sets'")
    sets = []
    for i, s in enumerate(d["sets"]):
        if not isinstance(s, dict) or "vectors" not in s:
            raise InputError(f"set {i} needs 'vectors'")
        try:
            V = np.array(s["vectors"], dtype=float)
        except (TypeError, ValueError):
            raise InputError(f"set {i}: vectors must be numeric")
        if V.ndim != 2:
            raise InputError(f"set {i}: vectors must be a list of coordinate lists")
        radius = s.get("radius")
        if s.get("lambdas") is None:
            sets.append(BalancedSet.from_vectors(V, radius))
        else:
            if radius is None:
                radius = float(np.linalg.norm(V[0]))
            sets.append(BalancedSet(V, s["lambdas"], radius))
    if not sets:
        raise InputError("sets file has no sets")
    n = sets[0].dim
    if "dim" in d and d["dim"] != n:
        raise InputError(f"sets file declares dim {d['dim']} but vectors have dimension {n}")
    c = np.zeros(n) if d.get("c") is None else np.array(d["c"], dtype=float)
    if c.shape != (n,):
        raise InputError(f"c must have dimension {n}")
    return sets, c


def sets_to_dict(sets, c=None):
    n = sets[0].dim
    return {
        "dim": n,
        "c": (np.zeros(n) if c is None else np.asarray(c, dtype=float)).tolist(),
        "sets": [s.to_dict() for s in sets],
    }


def instances_from_obj(obj):
    """Instance list: ``{"instances": [...]}``, a bare list, or one instance.

    Each instance is ``{"bodies": [body, ...], "gauge": gauge?}``.
    """
    if isinstance(obj, dict) and "instances" in obj:
        items = obj["instances"]
    elif isinstance(obj, list):
        items = obj
    elif isinstance(obj, dict) and "bodies" in obj:
        items = [obj]
    else:
        raise InputError("instances file must hold 'instances', a list, or one instance")
    out = []
    for i, inst in enumerate(items):
        if not isinstance(inst, dict) or "bodies" not in inst:
            raise InputError(f"instance {i} needs 'bodies'")
        bodies = [body_from_dict(b) for b in inst["bodies"]]
        gauge = Gauge.from_dict(inst["gauge"]) if inst.get("gauge") is not None else None
        out.append((bodies, gauge))
    return out
