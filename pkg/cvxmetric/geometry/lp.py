"""Dense two-phase simplex with Bland's anti-cycling rule.

Desk-scale only: every tableau is a dense numpy array and each pivot is a
rank-one update. No presolve, no scaling, no warm starts.
"""

import logging

import numpy as np
from numpy.typing import NDArray

from cvxmetric.errors import DimensionError, PivotLimitError

from .types import POS_INF, ExtReal, LPResult, LPStatus, Vector, as_vector

logger = logging.getLogger(__name__)

PIVOT_TOL = 1e-10
FEAS_TOL = 1e-9
MAX_PIVOTS_FACTOR = 10


class _PivotBudget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self) -> None:
        self.used += 1
        if self.used > self.limit:
            raise PivotLimitError(f"Simplex exceeded {self.limit} pivots")


def _pivot(T: NDArray[np.float64], row: int, col: int) -> None:
    T[row] /= T[row, col]
    factors = T[:, col].copy()
    factors[row] = 0.0
    T -= np.outer(factors, T[row])
    # Keep the right-hand side feasible against round-off.
    rhs = T[:-1, -1]
    rhs[(rhs < 0.0) & (rhs > -PIVOT_TOL)] = 0.0


def _iterate(
    T: NDArray[np.float64],
    basis: NDArray[np.intp],
    ncols: int,
    budget: _PivotBudget,
    pivot_tol: float,
) -> LPStatus:
    """Run primal simplex on a tableau whose last row holds reduced costs.

    Entering column: lowest index with negative reduced cost. Leaving row:
    minimum ratio, ties broken by lowest basic variable index.
    """
    while True:
        reduced = T[-1, :ncols]
        entering = np.flatnonzero(reduced < -pivot_tol)
        if entering.size == 0:
            return LPStatus.OPTIMAL
        col = int(entering[0])

        column = T[:-1, col]
        rows = np.flatnonzero(column > pivot_tol)
        if rows.size == 0:
            return LPStatus.UNBOUNDED
        ratios = T[rows, -1] / column[rows]
        best = ratios.min()
        ties = rows[ratios <= best + pivot_tol * max(1.0, abs(best))]
        row = int(ties[np.argmin(basis[ties])])

        budget.spend()
        _pivot(T, row, col)
        basis[row] = col


def _solve_standard(
    c: Vector,
    A: NDArray[np.float64],
    b: Vector,
    pivot_tol: float,
    max_pivots_factor: int,
) -> tuple[LPStatus, float | None, Vector | None, int]:
    m, n = A.shape
    A = A.copy()
    b = b.copy()
    negative = b < 0.0
    A[negative] *= -1.0
    b[negative] *= -1.0

    budget = _PivotBudget(max_pivots_factor * (m + n))

    # Phase I: maximize -sum(artificials) from the artificial basis.
    T = np.zeros((m + 1, n + m + 1))
    T[:m, :n] = A
    T[:m, n : n + m] = np.eye(m)
    T[:m, -1] = b
    T[-1, :n] = -A.sum(axis=0)
    T[-1, -1] = -b.sum()
    basis = np.arange(n, n + m)

    _iterate(T, basis, n + m, budget, pivot_tol)
    infeasibility = -T[-1, -1]
    if infeasibility > FEAS_TOL * max(1.0, float(b.max(initial=0.0))):
        logger.debug("LP infeasible: phase I residual %.3e", infeasibility)
        return LPStatus.INFEASIBLE, None, None, budget.used

    keep: list[int] = []
    for i in range(m):
        if basis[i] < n:
            keep.append(i)
            continue
        candidates = np.flatnonzero(np.abs(T[i, :n]) > pivot_tol)
        if candidates.size == 0:
            # Redundant equality row.
            continue
        budget.spend()
        _pivot(T, i, int(candidates[0]))
        basis[i] = int(candidates[0])
        keep.append(i)

    # Phase II on the original columns.
    T2 = np.zeros((len(keep) + 1, n + 1))
    T2[:-1, :n] = T[keep, :n]
    T2[:-1, -1] = T[keep, -1]
    basis = basis[keep]
    T2[-1, :n] = -c
    for i, j in enumerate(basis):
        T2[-1] -= T2[-1, j] * T2[i]

    status = _iterate(T2, basis, n, budget, pivot_tol)
    logger.debug("LP %s after %d pivots", status.value, budget.used)
    if status is LPStatus.UNBOUNDED:
        return status, None, None, budget.used

    x = np.zeros(n)
    x[basis] = T2[:-1, -1]
    return status, float(T2[-1, -1]), x, budget.used


def lp_maximize_standard(
    c,
    A_eq,
    b_eq,
    pivot_tol: float = PIVOT_TOL,
    max_pivots_factor: int = MAX_PIVOTS_FACTOR,
) -> LPResult:
    """Maximize ``c @ x`` subject to ``A_eq @ x == b_eq`` and ``x >= 0``."""
    c = as_vector(c)
    A = np.array(A_eq, dtype=float, ndmin=2)
    b = as_vector(b_eq)
    if A.shape != (b.shape[0], c.shape[0]):
        raise DimensionError(
            f"A_eq shape {A.shape} does not match c ({c.shape[0]}) and "
            f"b_eq ({b.shape[0]})"
        )
    status, value, x, pivots = _solve_standard(c, A, b, pivot_tol, max_pivots_factor)
    return _result(status, value, x, pivots)


def lp_maximize(
    c,
    A,
    b,
    pivot_tol: float = PIVOT_TOL,
    max_pivots_factor: int = MAX_PIVOTS_FACTOR,
) -> LPResult:
    """Maximize ``c @ x`` over free ``x`` subject to ``A @ x <= b``.

    Free variables are split as ``x = x+ - x-`` and each row gets a slack,
    giving the standard form solved by the shared simplex core.
    """
    c = as_vector(c)
    A = np.array(A, dtype=float, ndmin=2)
    b = as_vector(b)
    m, n = A.shape
    if n != c.shape[0]:
        raise DimensionError(f"A has {n} columns but c has length {c.shape[0]}")
    if m != b.shape[0]:
        raise DimensionError(f"A has {m} rows but b has length {b.shape[0]}")

    A_eq = np.hstack([A, -A, np.eye(m)])
    c_eq = np.concatenate([c, -c, np.zeros(m)])
    status, value, x, pivots = _solve_standard(
        c_eq, A_eq, b, pivot_tol, max_pivots_factor
    )
    argmax = None if x is None else x[:n] - x[n : 2 * n]
    return _result(status, value, argmax, pivots)


def _result(
    status: LPStatus, value: float | None, x: Vector | None, pivots: int
) -> LPResult:
    if status is LPStatus.OPTIMAL and value is not None:
        return LPResult(status, ExtReal.finite(value), x, pivots)
    if status is LPStatus.UNBOUNDED:
        return LPResult(status, POS_INF, None, pivots)
    return LPResult(status, None, None, pivots)
