"""Linear programming front end.

Problems here are tiny (a few hundred rows at most), so the solver is the
HiGHS dual simplex shipped with scipy. Every optimal answer is re-checked
against the KKT conditions before it is handed back; a solution that fails
the check is reported as a :class:`~radii.errors.SolverFailure` rather than
silently returned.

Dual convention
---------------
Problems are internally brought to ``min c_min @ x`` with rows
``s_i * (a_i @ x - b_i) <= 0`` (``s_i = +1`` for ``<=`` and ``==``, ``-1`` for
``>=``).  ``duals[i]`` is the multiplier ``y_i`` of row ``i`` in

    c_min + sum_i y_i s_i a_i = 0,   y_i >= 0 for inequality rows,

where ``c_min = c`` for minimisation and ``-c`` for maximisation.
"""
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linprog

from radii.errors import InputError, SolverFailure
from radii.tolerances import EPS_FEAS

_RELATIONS = {"<=": 1.0, "==": 0.0, ">=": -1.0}
_HIGHS_OPTIONS = {
    "primal_feasibility_tolerance": 1e-10,
    "dual_feasibility_tolerance": 1e-10,
    "presolve": True,
}


@dataclass(frozen=True)
class LPSolution:
    status: str
    x: np.ndarray
    objective: float
    duals: np.ndarray

    @property
    def optimal(self):
        return self.status == "optimal"


def solve_lp(objective, rows, sense="min", eps=EPS_FEAS):
    """Solve a small LP with free variables.

    Parameters
    ----------
    objective : array_like, shape (d,)
    rows : sequence of (a, relation, b)
        ``relation`` is one of ``"<="``, ``">="``, ``"=="``.
    sense : {"min", "max"}

    Returns
    -------
    LPSolution
        ``status`` is ``"optimal"``, ``"infeasible"`` or ``"unbounded"``.

    Examples
    --------
    >>> solve_lp([1.0], [([1.0], ">=", 2.0)]).objective
    2.0
    """
    c = _as_finite_vector(objective, "objective")
    d = c.size
    if not rows:
        A = np.zeros((0, d))
        rel = np.zeros(0)
        b = np.zeros(0)
    else:
        A = np.empty((len(rows), d))
        rel = np.empty(len(rows))
        b = np.empty(len(rows))
        for i, row in enumerate(rows):
            try:
                a, r, bi = row
            except (TypeError, ValueError):
                raise InputError(f"row {i} is not a (vector, relation, rhs) triple")
            a = _as_finite_vector(a, f"row {i}")
            if a.size != d:
                raise InputError(
                    f"row {i} has {a.size} coefficients, objective has {d}"
                )
            if r not in _RELATIONS:
                raise InputError(f"row {i}: unknown relation {r!r}")
            if not np.isfinite(bi):
                raise InputError(f"row {i}: non-finite right-hand side")
            A[i], rel[i], b[i] = a, _RELATIONS[r], float(bi)
    return solve_lp_arrays(c, A, rel, b, sense=sense, eps=eps)


def solve_lp_arrays(c, A, rel, b, sense="min", eps=EPS_FEAS):
    """Array form of :func:`solve_lp`.

    ``rel`` holds ``+1`` (``<=``), ``0`` (``==``) or ``-1`` (``>=``) per row.
    """
    c = np.asarray(c, dtype=float)
    A = np.asarray(A, dtype=float).reshape(-1, c.size)
    rel = np.asarray(rel, dtype=float)
    b = np.asarray(b, dtype=float)
    if sense not in ("min", "max"):
        raise InputError(f"sense must be 'min' or 'max', got {sense!r}")
    if A.shape[0] != rel.size or A.shape[0] != b.size:
        raise InputError("row data have inconsistent lengths")
    c_min = c if sense == "min" else -c

    eq = rel == 0.0
    ineq = ~eq
    sign = np.where(rel < 0, -1.0, 1.0)
    A_ub = (sign[ineq, None] * A[ineq]) if ineq.any() else None
    b_ub = (sign[ineq] * b[ineq]) if ineq.any() else None
    A_eq = A[eq] if eq.any() else None
    b_eq = b[eq] if eq.any() else None

    res = linprog(
        c_min,
        A_ub=A_ub,
        b_ub=b_ub,
        A_eq=A_eq,
        b_eq=b_eq,
        bounds=(None, None),
        method="highs-ds",
        options=_HIGHS_OPTIONS,
    )
    nan_x = np.full(c.size, np.nan)
    nan_y = np.full(A.shape[0], np.nan)
    if res.status == 2:
        return LPSolution("infeasible", nan_x, np.nan, nan_y)
    if res.status == 3:
        return LPSolution("unbounded", nan_x, -np.inf if sense == "min" else np.inf, nan_y)
    if res.status != 0:
        raise SolverFailure(f"LP solver stalled: {res.message}", incumbent=res.x)

    x = np.asarray(res.x, dtype=float)
    y = np.zeros(A.shape[0])
    if ineq.any():
        y[ineq] = -np.asarray(res.ineqlin.marginals)
    if eq.any():
        y[eq] = -np.asarray(res.eqlin.marginals)
    obj_min = float(c_min @ x)
    _check_kkt(c_min, A, sign, eq, b, x, y, obj_min, eps)
    objective = obj_min if sense == "min" else -obj_min
    return LPSolution("optimal", x, objective, y)


def _check_kkt(c_min, A, sign, eq, b, x, y, obj_min, eps):
    scale = 1.0 + max(
        np.abs(A).max(initial=0.0), np.abs(b).max(initial=0.0), np.abs(c_min).max(initial=0.0)
    )
    tol = eps * scale * max(1.0, np.abs(x).max(initial=0.0))
    resid = A @ x - b
    viol = np.where(eq, np.abs(resid), np.maximum(sign * resid, 0.0))
    if viol.size and viol.max() > tol:
        raise SolverFailure(f"LP primal infeasibility {viol.max():.3e}", incumbent=x)
    if (~eq).any() and y[~eq].min() < -tol:
        raise SolverFailure(f"LP dual sign violation {y[~eq].min():.3e}", incumbent=x)
    signed = np.where(eq, 1.0, sign)
    stat = c_min + A.T @ (signed * y)
    if stat.size and np.abs(stat).max() > tol:
        raise SolverFailure(f"LP stationarity residual {np.abs(stat).max():.3e}", incumbent=x)
    slack = np.where(eq, 0.0, y * np.abs(resid))
    if slack.size and slack.max() > tol:
        raise SolverFailure(f"LP complementary slackness {slack.max():.3e}", incumbent=x)
    dual_obj = -float(np.sum(signed * y * b))
    if abs(dual_obj - obj_min) > eps * scale * (1.0 + abs(obj_min)):
        raise SolverFailure(
            f"LP duality gap {abs(dual_obj - obj_min):.3e}", incumbent=x
        )


def _as_finite_vector(v, what):
    try:
        arr = np.asarray(v, dtype=float).reshape(-1)
    except (TypeError, ValueError):
        raise InputError(f"{what} is not a numeric vector")
    if not np.all(np.isfinite(arr)):
        raise InputError(f"{what} contains NaN or Inf")
    return arr
