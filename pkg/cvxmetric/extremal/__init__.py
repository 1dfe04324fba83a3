from .construction import (
    attainment_check,
    build_extremal,
    eval_extremal,
    optimal_variation,
    sigma,
)
from .types import Attainment, ExtremalFn, Orientation

__all__ = [
    "Attainment",
    "ExtremalFn",
    "Orientation",
    "attainment_check",
    "build_extremal",
    "eval_extremal",
    "optimal_variation",
    "sigma",
]
