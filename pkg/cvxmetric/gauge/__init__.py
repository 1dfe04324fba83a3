from .subdiff import (
    TOL_SUBDIFF,
    gauge_as_convex_fn,
    gauge_value,
    hrep_contains,
    max_subdiff_contains,
    max_subdiff_hrep,
    max_subdiff_membership,
    max_subdiff_support,
    subgradient_of_max_affine,
)
from .types import GaugeConvexFn, GaugeFn, SubdiffMembership

__all__ = [
    "TOL_SUBDIFF",
    "GaugeConvexFn",
    "GaugeFn",
    "SubdiffMembership",
    "gauge_as_convex_fn",
    "gauge_value",
    "hrep_contains",
    "max_subdiff_contains",
    "max_subdiff_hrep",
    "max_subdiff_membership",
    "max_subdiff_support",
    "subgradient_of_max_affine",
]
