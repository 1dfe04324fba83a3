from .distances import (
    METRICS,
    TAU_SATURATION,
    distance_matrix,
    funk,
    funk_from_tau,
    funk_ratio,
    hilbert,
    thompson,
)
from .types import Metric, MetricValue

__all__ = [
    "METRICS",
    "TAU_SATURATION",
    "Metric",
    "MetricValue",
    "distance_matrix",
    "funk",
    "funk_from_tau",
    "funk_ratio",
    "hilbert",
    "thompson",
]
