"""Funk weak metric and its Thompson / Hilbert symmetrizations.

Every value is computed from tau:  F(x, y) = -log(1 - 1/tau(x, y)),
with F = 0 along recession directions.
"""

import logging
import math

import numpy as np

from cvxmetric.errors import NearBoundaryError, NotInteriorError
from cvxmetric.geometry import (
    TOL_INT,
    ConvexBody,
    ExtReal,
    as_vector,
    is_interior,
    tau,
    tau_from_norms,
)

from .types import Metric, MetricValue

logger = logging.getLogger(__name__)

TAU_SATURATION = 1e12


def funk_from_tau(t: ExtReal, saturation: float = TAU_SATURATION) -> MetricValue:
    if t.is_inf:
        return MetricValue(0.0)
    value = t.finite_value()
    if value > saturation:
        logger.warning("tau = %.3e above %.0e treated as +inf", value, saturation)
        return MetricValue(0.0, saturated=True)
    return MetricValue(-math.log1p(-1.0 / value))


def funk(
    body: ConvexBody,
    x,
    y,
    tol_int: float = TOL_INT,
    saturation: float = TAU_SATURATION,
) -> MetricValue:
    return funk_from_tau(tau(body, x, y, tol_int=tol_int), saturation)


def funk_ratio(
    body: ConvexBody,
    x,
    y,
    tol_int: float = TOL_INT,
    saturation: float = TAU_SATURATION,
) -> MetricValue:
    """log(||x - b|| / ||y - b||) with b = b(x, y), Euclidean norm.

    Cross-check path only: tau is recovered from the boundary point by
    ``tau_from_norms``. Agrees with ``funk`` up to round-off.
    """
    x = as_vector(x, body.dim)
    y = as_vector(y, body.dim)
    t = tau(body, x, y, tol_int=tol_int)
    if t.is_inf:
        return MetricValue(0.0)
    if t.finite_value() > saturation:
        return MetricValue(0.0, saturated=True)
    b = x + t.finite_value() * (y - x)
    # ||y - b|| = (tau - 1) ||x - y||, so the ratio is tau / (tau - 1).
    recovered = tau_from_norms(x, y, b)
    return MetricValue(math.log(recovered / (recovered - 1.0)))


def thompson(
    body: ConvexBody,
    x,
    y,
    tol_int: float = TOL_INT,
    saturation: float = TAU_SATURATION,
) -> MetricValue:
    forward = funk(body, x, y, tol_int, saturation)
    backward = funk(body, y, x, tol_int, saturation)
    return MetricValue(
        max(forward.value, backward.value),
        forward.saturated or backward.saturated,
    )


def hilbert(
    body: ConvexBody,
    x,
    y,
    tol_int: float = TOL_INT,
    saturation: float = TAU_SATURATION,
) -> MetricValue:
    forward = funk(body, x, y, tol_int, saturation)
    backward = funk(body, y, x, tol_int, saturation)
    return MetricValue(
        0.5 * (forward.value + backward.value),
        forward.saturated or backward.saturated,
    )


METRICS = {
    Metric.FUNK: funk,
    Metric.THOMPSON: thompson,
    Metric.HILBERT: hilbert,
}


def distance_matrix(
    body: ConvexBody,
    points,
    metric: Metric | str = Metric.FUNK,
    tol_int: float = TOL_INT,
    saturation: float = TAU_SATURATION,
) -> np.ndarray:
    """M[i][j] = metric(p_i, p_j), zero diagonal.

    Funk values are computed once per ordered pair; the symmetric metrics
    are assembled from them, so they are exactly symmetric.
    """
    metric = Metric(metric)
    pts = [as_vector(p, body.dim) for p in points]
    for i, p in enumerate(pts):
        if not is_interior(body, p, tol_int * body.scale):
            raise NearBoundaryError("not strictly interior", index=i)

    n = len(pts)
    F = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            try:
                F[i, j] = funk(body, pts[i], pts[j], tol_int, saturation).value
            except NotInteriorError as e:
                raise NearBoundaryError(str(e), index=j) from e

    if metric is Metric.FUNK:
        return F
    if metric is Metric.THOMPSON:
        return np.maximum(F, F.T)
    return 0.5 * (F + F.T)
