from .fixtures import dump_fixture, fn_from_dict, fn_to_dict, load_fixture
from .generators import (
    BODY_KINDS,
    BUILTIN_FNS,
    builtin_fn,
    max_affine_fn,
    random_body,
    random_convex_fn,
    random_pairs,
    rng_stream,
)
from .oracle import hilbert_cross_ratio_oracle, tau_bisection_oracle
from .types import PiecewiseAffineConvexFn

__all__ = [
    "BODY_KINDS",
    "BUILTIN_FNS",
    "PiecewiseAffineConvexFn",
    "builtin_fn",
    "dump_fixture",
    "fn_from_dict",
    "fn_to_dict",
    "hilbert_cross_ratio_oracle",
    "load_fixture",
    "max_affine_fn",
    "random_body",
    "random_convex_fn",
    "random_pairs",
    "rng_stream",
    "tau_bisection_oracle",
]
