"""Universal variation bounds for convex functions with values in [m, M].

For interior x, y:

    -(M - m) / tau(y, x)  <=  f(y) - f(x)  <=  (M - m) / tau(x, y)

and the same bounds rewritten with the Funk, Thompson and Hilbert metrics.
"""

import logging
import math

from cvxmetric.errors import RangeViolation
from cvxmetric.geometry import TOL_INT, ConvexBody, Vector, as_vector, tau
from cvxmetric.metrics import TAU_SATURATION, funk

from .types import (
    BoundedConvexFn,
    BoundReport,
    BoundsInterval,
    CallableConvexFn,
    LipschitzCertificate,
    MetricFormBounds,
)

logger = logging.getLogger(__name__)

TOL_CERT = 1e-9


def _check_range(m: float, M: float) -> None:
    if not m <= M:
        raise ValueError(f"Need m <= M, got m={m}, M={M}")


def variation_bounds(
    body: ConvexBody, x, y, m: float, M: float, tol_int: float = TOL_INT
) -> BoundsInterval:
    _check_range(m, M)
    span = M - m
    upper = span * tau(body, x, y, tol_int=tol_int).reciprocal()
    lower = -span * tau(body, y, x, tol_int=tol_int).reciprocal()
    # Zero bounds are reported as +0.0.
    return BoundsInterval(lower=lower + 0.0, upper=upper + 0.0, m=m, M=M)


def _one_minus_exp_neg(s: float) -> float:
    return -math.expm1(-s)


def metric_form_bounds(
    body: ConvexBody,
    x,
    y,
    m: float,
    M: float,
    tol_int: float = TOL_INT,
    saturation: float = TAU_SATURATION,
) -> MetricFormBounds:
    _check_range(m, M)
    span = M - m
    forward = funk(body, x, y, tol_int, saturation).value
    backward = funk(body, y, x, tol_int, saturation).value
    thompson = max(forward, backward)
    hilbert = 0.5 * (forward + backward)
    funk_form = BoundsInterval(
        lower=-span * _one_minus_exp_neg(backward) + 0.0,
        upper=span * _one_minus_exp_neg(forward) + 0.0,
        m=m,
        M=M,
    )
    return MetricFormBounds(
        funk_form=funk_form,
        thompson_bound=span * _one_minus_exp_neg(thompson),
        hilbert_bound=span * _one_minus_exp_neg(2.0 * hilbert),
    )


def evaluate_in_range(f: BoundedConvexFn, z: Vector, tol: float = TOL_CERT) -> float:
    """Evaluate ``f`` and reject values outside [m - tol, M + tol]."""
    value = f(z)
    if not f.m - tol <= value <= f.M + tol:
        raise RangeViolation(
            f"f({z.tolist()}) = {value!r} outside [{f.m}, {f.M}]",
            point=z,
            value=value,
        )
    return value


def normalize(f: BoundedConvexFn) -> BoundedConvexFn:
    """(f - m) / (M - m), a convex function with values in [0, 1]."""
    span = f.M - f.m
    if span == 0.0:
        return CallableConvexFn(lambda z: 0.0, 0.0, 1.0)
    return CallableConvexFn(lambda z: (f(z) - f.m) / span, 0.0, 1.0)


def certify(
    body: ConvexBody,
    f: BoundedConvexFn,
    pairs,
    tol_cert: float = TOL_CERT,
    tol_int: float = TOL_INT,
) -> list[BoundReport]:
    """One report per pair, in input order.

    A failing report witnesses that ``f`` is not convex with range [m, M].
    """
    reports = []
    for x, y in pairs:
        x = as_vector(x, body.dim)
        y = as_vector(y, body.dim)
        fx = evaluate_in_range(f, x, tol_cert)
        fy = evaluate_in_range(f, y, tol_cert)
        observed = fy - fx
        interval = variation_bounds(body, x, y, f.m, f.M, tol_int=tol_int)
        reports.append(
            BoundReport(
                x=x,
                y=y,
                observed=observed,
                interval=interval,
                slack_lower=observed - interval.lower,
                slack_upper=interval.upper - observed,
                passed=interval.contains(observed, tol_cert),
            )
        )
    failures = [r for r in reports if not r.passed]
    if failures:
        logger.info("certify: %d of %d pairs fail", len(failures), len(reports))
    return reports


def lipschitz_certificates(
    body: ConvexBody,
    f: BoundedConvexFn,
    pairs,
    tol_cert: float = TOL_CERT,
    tol_int: float = TOL_INT,
    saturation: float = TAU_SATURATION,
) -> list[LipschitzCertificate]:
    """|f(y) - f(x)| against (M - m) T(x, y) and 2 (M - m) H(x, y)."""
    span = f.M - f.m
    certificates = []
    for x, y in pairs:
        x = as_vector(x, body.dim)
        y = as_vector(y, body.dim)
        fx = evaluate_in_range(f, x, tol_cert)
        fy = evaluate_in_range(f, y, tol_cert)
        lhs = abs(fy - fx)
        forward = funk(body, x, y, tol_int, saturation).value
        backward = funk(body, y, x, tol_int, saturation).value
        thompson_rhs = span * max(forward, backward)
        hilbert_rhs = 2.0 * span * (0.5 * (forward + backward))
        certificates.append(
            LipschitzCertificate(
                x=x,
                y=y,
                lhs=lhs,
                thompson_rhs=thompson_rhs,
                hilbert_rhs=hilbert_rhs,
                thompson_pass=lhs <= thompson_rhs + tol_cert,
                hilbert_pass=lhs <= hilbert_rhs + tol_cert,
            )
        )
    return certificates
