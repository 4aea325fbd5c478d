"""Dense linear programming via two-phase simplex.

All convex decision procedures in the package go through ``solve``.  The
solver is deliberately simple: dense tableau, Bland's rule (lowest index)
for both the entering and the leaving variable, so every answer is fully
deterministic and cycling is impossible.  Problem sizes around here never
exceed a few hundred variables.

Infeasible verdicts are certified: phase 1 produces a Farkas vector y with
y^T A <= 0 and y^T b > 0 for the standard-form system, and the certificate
is re-checked before the verdict is returned.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, NumericalFailure

# Single feasibility tolerance for the whole package.
FEASTOL = 1e-9
# Farkas certificates are validated at a looser tolerance.
CERT_TOL = 1e-7
# Pivot threshold: entries smaller than this are treated as zero.
_PIVTOL = 1e-10

MAX_PIVOTS = 10 ** 6


@dataclass
class LpProblem:
    """max c.x  s.t.  A_eq x = b_eq,  A_ub x >= b_ub,  bounds on x.

    ``bounds`` is a list of (lo, hi) pairs, one per variable; ``None``
    entries mean unbounded on that side.  ``objective=None`` means a pure
    feasibility problem.
    """

    n_vars: int
    objective: np.ndarray | None = None
    a_eq: np.ndarray | None = None
    b_eq: np.ndarray | None = None
    a_ub: np.ndarray | None = None
    b_ub: np.ndarray | None = None
    bounds: list | None = None

    def __post_init__(self):
        n = self.n_vars
        if n < 1:
            raise DimensionMismatch("need at least one variable")
        if self.objective is not None:
            self.objective = np.asarray(self.objective, dtype=float)
            if self.objective.shape != (n,):
                raise DimensionMismatch("objective length != n_vars")
        for name in ("eq", "ub"):
            a = getattr(self, "a_" + name)
            b = getattr(self, "b_" + name)
            if (a is None) != (b is None):
                raise DimensionMismatch(f"a_{name}/b_{name} must be given together")
            if a is not None:
                a = np.atleast_2d(np.asarray(a, dtype=float))
                b = np.atleast_1d(np.asarray(b, dtype=float))
                if a.shape[1] != n or a.shape[0] != b.shape[0]:
                    raise DimensionMismatch(f"a_{name} shape {a.shape} inconsistent")
                setattr(self, "a_" + name, a)
                setattr(self, "b_" + name, b)
        if self.bounds is not None and len(self.bounds) != n:
            raise DimensionMismatch("bounds length != n_vars")


@dataclass
class LpResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: np.ndarray | None = None
    objective_value: float = np.nan
    # Farkas vector for the standard-form rows, present iff infeasible.
    certificate: np.ndarray | None = field(default=None, repr=False)


def _bland_simplex(tab, basis, cost, allowed, maxiter):
    """Minimize cost over the canonical tableau ``tab`` = [A | b].

    ``allowed`` marks columns that may enter the basis.  Returns "optimal"
    or "unbounded"; ``tab`` and ``basis`` are updated in place.
    """
    m, ncols = tab.shape
    ncols -= 1
    it = 0
    while True:
        it += 1
        if it > maxiter:
            raise NumericalFailure("simplex iteration cap exceeded")
        cb = cost[basis]
        reduced = cost - cb @ tab[:, :ncols]
        candidates = np.where(allowed & (reduced < -_PIVTOL))[0]
        if candidates.size == 0:
            return "optimal"
        j = candidates[0]  # Bland: lowest index enters
        col = tab[:, j]
        rows = np.where(col > _PIVTOL)[0]
        if rows.size == 0:
            return "unbounded"
        ratios = tab[rows, -1] / col[rows]
        best = ratios.min()
        tied = rows[ratios <= best + _PIVTOL]
        r = tied[np.argmin([basis[i] for i in tied])]  # Bland: lowest basis index leaves
        piv = tab[r, j]
        tab[r] /= piv
        for i in range(m):
            if i != r and abs(tab[i, j]) > 1e-14:
                tab[i] -= tab[i, j] * tab[r]
        basis[r] = j


def _standard_form(prob):
    """Rewrite as min c.z, A z = b, z >= 0 with split free variables.

    Returns (a, b, c, recover) where recover(z) gives the original x.
    """
    n = prob.n_vars
    rows_a = []
    rows_b = []
    if prob.a_eq is not None:
        rows_a.append(prob.a_eq)
        rows_b.append(prob.b_eq)
    if prob.a_ub is not None:
        rows_a.append(prob.a_ub)
        rows_b.append(prob.b_ub)
        n_ub = prob.a_ub.shape[0]
    else:
        n_ub = 0
    if prob.bounds is not None:
        for i, (lo, hi) in enumerate(prob.bounds):
            e = np.zeros(n)
            e[i] = 1.0
            if lo is not None:
                rows_a.append(e[None, :])
                rows_b.append(np.array([lo]))
                n_ub += 1
            if hi is not None:
                rows_a.append(-e[None, :])
                rows_b.append(np.array([-hi]))
                n_ub += 1
    if not rows_a:
        raise DimensionMismatch("problem has no constraints")
    a = np.vstack(rows_a)
    b = np.concatenate(rows_b)
    m = a.shape[0]
    n_eq = m - n_ub

    # x = z+ - z-, one surplus per inequality row
    a_std = np.hstack([a, -a, np.zeros((m, n_ub))])
    for k in range(n_ub):
        a_std[n_eq + k, 2 * n + k] = -1.0
    c_std = np.zeros(2 * n + n_ub)
    if prob.objective is not None:
        c_std[:n] = -prob.objective  # maximize -> minimize
        c_std[n:2 * n] = prob.objective

    def recover(z):
        return z[:n] - z[n:2 * n]

    return a_std, b, c_std, recover


def solve(prob: LpProblem, maxiter: int = MAX_PIVOTS) -> LpResult:
    """Solve an LP; optimal solutions satisfy all constraints within FEASTOL."""
    a, b, c, recover = _standard_form(prob)
    m, ncols = a.shape

    # flip rows so the rhs is nonnegative
    a = np.asarray(a, dtype=float).copy()
    b = np.asarray(b, dtype=float).copy()
    flip = b < 0
    a[flip] *= -1.0
    b[flip] *= -1.0

    # phase 1: artificial basis
    tab = np.hstack([a, np.eye(m), b[:, None]])
    basis = list(range(ncols, ncols + m))
    cost1 = np.concatenate([np.zeros(ncols), np.ones(m)])
    allowed = np.ones(ncols + m, dtype=bool)
    _bland_simplex(tab, basis, cost1, allowed, maxiter)
    phase1_val = float(cost1[basis] @ tab[:, -1])
    if phase1_val > FEASTOL:
        # Farkas certificate from the simplex multipliers: y = c1_B B^{-1},
        # read off the artificial columns which started as the identity.
        binv = tab[:, ncols:ncols + m]
        y = cost1[basis] @ binv
        if np.any(y @ a > CERT_TOL) or y @ b <= CERT_TOL * max(1.0, np.abs(b).max()):
            raise NumericalFailure("infeasibility certificate failed validation")
        y_signed = y.copy()
        y_signed[flip] *= -1.0
        return LpResult(status="infeasible", certificate=y_signed)

    # drive any artificials still in the basis out of it
    for r in range(m):
        if basis[r] >= ncols:
            row = tab[r, :ncols]
            nz = np.where(np.abs(row) > _PIVTOL)[0]
            if nz.size == 0:
                continue  # redundant row, harmless
            j = nz[0]
            piv = tab[r, j]
            tab[r] /= piv
            for i in range(m):
                if i != r and abs(tab[i, j]) > 1e-14:
                    tab[i] -= tab[i, j] * tab[r]
            basis[r] = j

    # phase 2
    cost2 = np.concatenate([c, np.zeros(m)])
    allowed = np.concatenate([np.ones(ncols, dtype=bool), np.zeros(m, dtype=bool)])
    status = _bland_simplex(tab, basis, cost2, allowed, maxiter)
    if status == "unbounded":
        return LpResult(status="unbounded")

    z = np.zeros(ncols + m)
    z[basis] = tab[:, -1]
    x = recover(z)
    _check_feasible(prob, x)
    obj = float(prob.objective @ x) if prob.objective is not None else 0.0
    return LpResult(status="optimal", x=x, objective_value=obj)


def _check_feasible(prob, x):
    scale = max(1.0, float(np.abs(x).max()))
    tol = FEASTOL * scale
    if prob.a_eq is not None:
        if np.abs(prob.a_eq @ x - prob.b_eq).max() > tol:
            raise NumericalFailure("equality residual above tolerance")
    if prob.a_ub is not None:
        if (prob.a_ub @ x - prob.b_ub).min() < -tol:
            raise NumericalFailure("inequality violated above tolerance")
    if prob.bounds is not None:
        for i, (lo, hi) in enumerate(prob.bounds):
            if lo is not None and x[i] < lo - tol:
                raise NumericalFailure("lower bound violated")
            if hi is not None and x[i] > hi + tol:
                raise NumericalFailure("upper bound violated")
