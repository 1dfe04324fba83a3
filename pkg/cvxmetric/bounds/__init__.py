from .types import (
    BoundedConvexFn,
    BoundReport,
    BoundsInterval,
    CallableConvexFn,
    LipschitzCertificate,
    MetricFormBounds,
)
from .variation import (
    TOL_CERT,
    certify,
    evaluate_in_range,
    lipschitz_certificates,
    metric_form_bounds,
    normalize,
    variation_bounds,
)

__all__ = [
    "TOL_CERT",
    "BoundReport",
    "BoundedConvexFn",
    "BoundsInterval",
    "CallableConvexFn",
    "LipschitzCertificate",
    "MetricFormBounds",
    "certify",
    "evaluate_in_range",
    "lipschitz_certificates",
    "metric_form_bounds",
    "normalize",
    "variation_bounds",
]
