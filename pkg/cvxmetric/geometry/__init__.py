from .body import (
    NEAR_BOUNDARY,
    TOL_INT,
    affine_image,
    boundary_point_b,
    chebyshev_center,
    contains,
    is_interior,
    ray_exit,
    sample_interior,
    support_function,
    tau,
    tau_from_norms,
    to_hpolytope,
)
from .io import body_from_dict, body_to_dict, dump_body, load_body, load_points
from .lp import lp_maximize, lp_maximize_standard
from .types import (
    POS_INF,
    Ball,
    ConvexBody,
    ExtReal,
    HPolytope,
    LPResult,
    LPStatus,
    RayExitResult,
    Vector,
    VPolytope,
    as_vector,
)

__all__ = [
    "NEAR_BOUNDARY",
    "POS_INF",
    "TOL_INT",
    "Ball",
    "ConvexBody",
    "ExtReal",
    "HPolytope",
    "LPResult",
    "LPStatus",
    "RayExitResult",
    "VPolytope",
    "Vector",
    "affine_image",
    "as_vector",
    "body_from_dict",
    "body_to_dict",
    "boundary_point_b",
    "chebyshev_center",
    "contains",
    "dump_body",
    "is_interior",
    "load_body",
    "load_points",
    "lp_maximize",
    "lp_maximize_standard",
    "ray_exit",
    "sample_interior",
    "support_function",
    "tau",
    "tau_from_norms",
    "to_hpolytope",
]
