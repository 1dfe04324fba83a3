"""Brute-force references for tau and the Hilbert metric.

These deliberately avoid the closed forms used by the geometry module:
``tau_bisection_oracle`` sees the body through membership queries only.
"""

import logging
import math

import numpy as np

from cvxmetric.errors import NotInteriorError, UnboundedChordError
from cvxmetric.geometry import (
    POS_INF,
    TOL_INT,
    ConvexBody,
    ExtReal,
    Vector,
    VPolytope,
    as_vector,
    contains,
    is_interior,
    ray_exit,
)

logger = logging.getLogger(__name__)

TOL_BISECTION = 1e-10
DOUBLING_CAP = 1e12
_REFINE_BRACKET = 1e-9
_REFINE_STEPS = 60


def _require_interior(body: ConvexBody, p: Vector, tol_int: float) -> None:
    if not is_interior(body, p, tol_int * body.scale):
        raise NotInteriorError(f"Point {p.tolist()} is not strictly interior")


def tau_bisection_oracle(
    body: ConvexBody,
    x,
    y,
    tol: float = TOL_BISECTION,
    tol_int: float = TOL_INT,
) -> ExtReal:
    """tau(x, y) by doubling then bisection on membership of x + t(y - x)."""
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    x = as_vector(x, body.dim)
    y = as_vector(y, body.dim)
    _require_interior(body, x, tol_int)
    _require_interior(body, y, tol_int)
    d = y - x
    if not np.any(d):
        return POS_INF

    hi = 1.0
    while contains(body, x + hi * d):
        hi *= 2.0
        if hi > DOUBLING_CAP:
            return POS_INF
    lo = hi / 2.0

    steps = 0
    while hi - lo > tol * max(1.0, lo):
        mid = 0.5 * (lo + hi)
        if contains(body, x + mid * d):
            lo = mid
        else:
            hi = mid
        steps += 1
    logger.debug("tau bisection: %d steps, bracket [%r, %r]", steps, lo, hi)
    return ExtReal.finite(lo)


def _refined_exit(body: ConvexBody, origin: Vector, direction: Vector) -> float:
    t = ray_exit(body, origin, direction).t
    if t.is_inf:
        raise UnboundedChordError(
            f"The chord from {origin.tolist()} along {direction.tolist()} "
            "never leaves the body"
        )
    t0 = t.finite_value()
    # V-polytope membership is tolerance-blurred; its LP exit is used as is.
    if isinstance(body, VPolytope):
        return t0
    lo = t0 * (1.0 - _REFINE_BRACKET)
    hi = t0 * (1.0 + _REFINE_BRACKET)
    if not contains(body, origin + lo * direction) or contains(
        body, origin + hi * direction
    ):
        return t0
    for _ in range(_REFINE_STEPS):
        mid = 0.5 * (lo + hi)
        if contains(body, origin + mid * direction):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def hilbert_cross_ratio_oracle(body: ConvexBody, x, y) -> float:
    """Half the log cross-ratio of x, y and the chord endpoints a, b.

    a is the exit from y through x and b the exit from x through y.
    """
    x = as_vector(x, body.dim)
    y = as_vector(y, body.dim)
    if np.array_equal(x, y):
        return 0.0
    d = y - x
    b = x + _refined_exit(body, x, d) * d
    a = y - _refined_exit(body, y, -d) * d

    dist = np.linalg.norm
    numerator = float(dist(a - y)) * float(dist(b - x))
    denominator = float(dist(a - x)) * float(dist(b - y))
    return 0.5 * math.log(numerator / denominator)
