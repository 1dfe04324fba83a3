"""Extremal convex functions attaining the variation bounds.

For a pair (x, y) with finite tau(x, y), let u = tau(x, y) (y - x) and
sigma(z) = sup{t >= 0 : z + t u in C}. Then phi = 1 - sigma is convex
(sigma is concave), and

    f = m + (M - m) max(phi, 0)

has f(x) = m and f(y) = m + (M - m) / tau(x, y).
"""

from cvxmetric.bounds import TOL_CERT
from cvxmetric.geometry import (
    TOL_INT,
    ConvexBody,
    ExtReal,
    as_vector,
    ray_exit,
    tau,
)

from .types import Attainment, ExtremalFn, Orientation


def sigma(body: ConvexBody, z, u, tol_int: float = TOL_INT) -> ExtReal:
    """sup{t >= 0 : z + t u in the body}."""
    return ray_exit(body, z, u, tol_int=tol_int).t


def build_extremal(
    body: ConvexBody,
    x,
    y,
    m: float,
    M: float,
    orientation: Orientation | str = Orientation.UPPER,
    tol_int: float = TOL_INT,
) -> ExtremalFn:
    """The upper orientation attains (M - m) / tau(x, y); the lower one
    swaps the roles of x and y and attains -(M - m) / tau(y, x)."""
    if not m <= M:
        raise ValueError(f"Need m <= M, got m={m}, M={M}")
    orientation = Orientation(orientation)
    x = as_vector(x, body.dim)
    y = as_vector(y, body.dim)
    base, target = (x, y) if orientation is Orientation.UPPER else (y, x)

    t = tau(body, base, target, tol_int=tol_int)
    u = None
    if t.is_finite and m < M:
        u = t.finite_value() * (target - base)
    return ExtremalFn(
        body=body, x=x, y=y, m=m, M=M, orientation=orientation, tau=t, u=u
    )


def eval_extremal(fn: ExtremalFn, z, tol_int: float = TOL_INT) -> float:
    if fn.u is None:
        return fn.m
    z = as_vector(z, fn.body.dim)
    s = sigma(fn.body, z, fn.u, tol_int=tol_int)
    if s.is_inf:
        # phi = -inf, absorbed by the clamp.
        return fn.m
    phi = 1.0 - s.finite_value()
    return fn.m + (fn.M - fn.m) * max(phi, 0.0)


def attainment_check(
    body: ConvexBody,
    x,
    y,
    m: float,
    M: float,
    tol: float = TOL_CERT,
    tol_int: float = TOL_INT,
) -> Attainment:
    """Build both extremal functions and check they meet the bounds exactly."""
    x = as_vector(x, body.dim)
    y = as_vector(y, body.dim)
    f = build_extremal(body, x, y, m, M, Orientation.UPPER, tol_int)
    g = build_extremal(body, x, y, m, M, Orientation.LOWER, tol_int)

    upper_target = (M - m) * f.tau.reciprocal()
    lower_target = -(M - m) * g.tau.reciprocal() + 0.0
    upper_difference = eval_extremal(f, y, tol_int) - eval_extremal(f, x, tol_int)
    lower_difference = eval_extremal(g, y, tol_int) - eval_extremal(g, x, tol_int)
    return Attainment(
        upper_attained=abs(upper_difference - upper_target) <= tol,
        lower_attained=abs(lower_difference - lower_target) <= tol,
        upper_difference=upper_difference,
        lower_difference=lower_difference,
        upper_target=upper_target,
        lower_target=lower_target,
    )


def optimal_variation(
    body: ConvexBody, x, y, m: float, M: float, tol_int: float = TOL_INT
) -> tuple[float, float]:
    """(min, max) of f(y) - f(x) over convex f with values in [m, M],
    each evaluated on the function that attains it."""
    result = attainment_check(body, x, y, m, M, tol_int=tol_int)
    return result.lower_difference, result.upper_difference
