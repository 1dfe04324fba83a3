"""Gauge values and the maximal subdifferential at the gauge center.

For convex f on the body with values in [m, M], every subgradient at x0
lies in (M - m) times the subdifferential of the gauge at x0, which is the
polar set {zeta : sup over v in (body - x0) of <zeta, v> <= 1}.
"""

import numpy as np

from cvxmetric.errors import ClampedPointError, NotInteriorError
from cvxmetric.geometry import (
    NEAR_BOUNDARY,
    POS_INF,
    TOL_INT,
    ConvexBody,
    ExtReal,
    HPolytope,
    Vector,
    VPolytope,
    as_vector,
    contains,
    is_interior,
    support_function,
    tau,
)
from cvxmetric.oracles import PiecewiseAffineConvexFn

from .types import GaugeConvexFn, GaugeFn, SubdiffMembership

TOL_SUBDIFF = 1e-9


def _check_range(m: float, M: float) -> None:
    if not m <= M:
        raise ValueError(f"Need m <= M, got m={m}, M={M}")


def _require_interior(body: ConvexBody, x0: Vector, tol_int: float) -> None:
    if not is_interior(body, x0, tol_int * body.scale):
        raise NotInteriorError(f"Center {x0.tolist()} is not strictly interior")


def gauge_value(
    fn: GaugeFn,
    x,
    tol_int: float = TOL_INT,
    near_boundary: float = NEAR_BOUNDARY,
) -> float:
    """g(x) = 1 / tau(center, x), with 0 when tau is infinite."""
    t = tau(fn.body, fn.center, x, tol_int=tol_int, near_boundary=near_boundary)
    return t.reciprocal()


def gauge_as_convex_fn(fn: GaugeFn, m: float, M: float) -> GaugeConvexFn:
    _check_range(m, M)
    return GaugeConvexFn(fn, m, M)


def max_subdiff_support(
    body: ConvexBody,
    x0,
    zeta,
    m: float,
    M: float,
    tol_int: float = TOL_INT,
) -> ExtReal:
    """Support of (body - x0) at zeta / (M - m).

    When m == M the maximal subdifferential is {0}: the value is 0 for
    zeta == 0 and +inf otherwise.
    """
    _check_range(m, M)
    x0 = as_vector(x0, body.dim)
    zeta = as_vector(zeta, body.dim)
    _require_interior(body, x0, tol_int)
    if m == M:
        return ExtReal.finite(0.0) if not np.any(zeta) else POS_INF
    direction = zeta / (M - m)
    s = support_function(body, direction)
    if s.is_inf:
        return POS_INF
    return ExtReal.finite(s.finite_value() - float(direction @ x0))


def max_subdiff_membership(
    body: ConvexBody,
    x0,
    zeta,
    m: float,
    M: float,
    tol_sub: float = TOL_SUBDIFF,
    tol_int: float = TOL_INT,
) -> SubdiffMembership:
    s = max_subdiff_support(body, x0, zeta, m, M, tol_int=tol_int)
    member = s.is_finite and s.finite_value() <= 1.0 + tol_sub
    return SubdiffMembership(member, s)


def max_subdiff_contains(
    body: ConvexBody,
    x0,
    zeta,
    m: float,
    M: float,
    tol_sub: float = TOL_SUBDIFF,
    tol_int: float = TOL_INT,
) -> bool:
    return max_subdiff_membership(body, x0, zeta, m, M, tol_sub, tol_int).member


def max_subdiff_hrep(
    vpoly: VPolytope, x0, m: float, M: float, tol_int: float = TOL_INT
) -> HPolytope:
    """{zeta : <zeta, v_i - x0> <= M - m for every vertex v_i}.

    Query with ``contains(hrep, zeta, tol=(M - m) * tol_sub)`` to match
    ``max_subdiff_contains``.
    """
    _check_range(m, M)
    x0 = as_vector(x0, vpoly.dim)
    _require_interior(vpoly, x0, tol_int)
    rows = vpoly.vertices - x0
    return HPolytope(rows, np.full(rows.shape[0], M - m))


def hrep_contains(
    hrep: HPolytope, zeta, m: float, M: float, tol_sub: float = TOL_SUBDIFF
) -> bool:
    return contains(hrep, zeta, tol=(M - m) * tol_sub)


def subgradient_of_max_affine(
    f: PiecewiseAffineConvexFn, x0, tol: float = TOL_SUBDIFF
) -> Vector:
    """scale * g_i for the active piece i at x0 (lowest index on ties)."""
    x0 = as_vector(x0, f.dim)
    if f(x0) <= f.m + tol:
        raise ClampedPointError(
            f"f is clamped at its floor {f.m} at {x0.tolist()}; 0 is a subgradient"
        )
    return f.scale * f.gradients[f.active_piece(x0)]
