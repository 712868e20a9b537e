"""Report records and their newline-delimited JSON encoding."""
import json
import math
from dataclasses import dataclass, field

import numpy as np

SCHEMA = "radii-report/1"
SIG_DIGITS = 12


@dataclass
class InstanceReport:
    instance_id: int
    seed: object
    theorem_tag: str
    lhs: float
    rhs: float
    slack: float
    passed: bool
    equality_flag: bool
    ratio: float = math.nan
    artifacts: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "schema": SCHEMA,
            "kind": "instance",
            "instance_id": self.instance_id,
            "seed": self.seed,
            "theorem_tag": self.theorem_tag,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "ratio": self.ratio,
            "pass": self.passed,
            "equality_flag": self.equality_flag,
            "artifacts": self.artifacts,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            instance_id=d["instance_id"], seed=d["seed"], theorem_tag=d["theorem_tag"],
            lhs=d["lhs"], rhs=d["rhs"], slack=d["slack"], passed=d["pass"],
            equality_flag=d["equality_flag"], ratio=_num(d.get("ratio")),
            artifacts=d.get("artifacts", {}),
        )


@dataclass
class ConjectureReport:
    conjecture_tag: str
    params: dict
    trials: int
    min_observed_slack: float
    argmin_trial: object
    violations: list
    extremal_candidates: list
    extras: dict = field(default_factory=dict)

    def to_dict(self):
        d = {
            "schema": SCHEMA,
            "kind": "conjecture",
            "conjecture_tag": self.conjecture_tag,
            "params": self.params,
            "trials": self.trials,
            "min_observed_slack": self.min_observed_slack,
            "argmin_trial": self.argmin_trial,
            "violations": self.violations,
            "extremal_candidates": self.extremal_candidates,
        }
        d.update(self.extras)
        return d


def _num(x):
    if x is None:
        return math.nan
    if isinstance(x, str):
        return {"inf": math.inf, "-inf": -math.inf, "nan": math.nan}[x]
    return float(x)


def clean(obj):
    """JSON-ready copy: numpy to builtins, floats to 12 significant digits,
    non-finite floats to the strings ``"inf"``, ``"-inf"``, ``"nan"``."""
    if isinstance(obj, dict):
        return {str(k): clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [clean(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return clean(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if math.isnan(x):
            return "nan"
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        x = float(f"{x:.{SIG_DIGITS}g}")
        return 0.0 if x == 0 else x
    return obj


def dumps(obj):
    if hasattr(obj, "to_dict"):
        obj = obj.to_dict()
    return json.dumps(clean(obj), allow_nan=False)


def write_ndjson(records, fh):
    for r in records:
        fh.write(dumps(r))
        fh.write("\n")


def read_ndjson(fh):
    out = []
    for line in fh:
        line = line.strip()
        if line:
            out.append(json.loads(line))
    return out
