from dataclasses import dataclass, field

from cvxmetric.bounds import BoundedConvexFn
from cvxmetric.geometry import ConvexBody, ExtReal, Vector, as_vector


@dataclass(frozen=True, eq=False)
class GaugeFn:
    """Minkowski gauge of the body centered at ``center``.

    g(x) = inf{lambda > 0 : x - center in lambda (body - center)}, which is
    0 at the center and below 1 on the interior.
    """

    body: ConvexBody = field(repr=False)
    center: Vector

    def __post_init__(self):
        object.__setattr__(self, "center", as_vector(self.center, self.body.dim))

    def __call__(self, x: Vector) -> float:
        # Deferred: subdiff imports this module.
        from .subdiff import gauge_value

        return gauge_value(self, x)


@dataclass(frozen=True, eq=False)
class GaugeConvexFn(BoundedConvexFn):
    """m + (M - m) g, the convex function with the largest subdifferential
    at the gauge center."""

    gauge: GaugeFn
    m: float
    M: float

    def __call__(self, z: Vector) -> float:
        return self.m + (self.M - self.m) * self.gauge(z)


@dataclass(frozen=True)
class SubdiffMembership:
    member: bool
    support_value: ExtReal
