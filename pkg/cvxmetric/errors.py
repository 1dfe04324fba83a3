class CvxMetricError(Exception):
    """Base exception for cvxmetric errors."""


class DimensionError(CvxMetricError, ValueError):
    """Raised when vector and body dimensions disagree."""


class BodyFormatError(CvxMetricError, ValueError):
    """Raised for malformed body documents."""

    def __init__(
        self, message: str, line: int | None = None, column: int | None = None
    ):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class DegenerateBodyError(CvxMetricError, ValueError):
    """Raised for body data violating representation invariants."""


class NotInteriorError(CvxMetricError):
    """Raised when a point is not strictly inside the body."""


class NearBoundaryError(NotInteriorError):
    """Raised when a finite tau is too close to 1 to yield a metric value."""

    def __init__(self, message: str, index: int | None = None):
        if index is not None:
            message = f"point {index}: {message}"
        super().__init__(message)
        self.index = index


class UnboundedDirectionError(CvxMetricError):
    """Raised when a finite value is required but the ray never leaves the body."""


class UnboundedChordError(UnboundedDirectionError):
    """Raised when the chord through two points is unbounded on one side."""


class PivotLimitError(CvxMetricError):
    """Raised when the simplex exceeds its pivot budget."""


class SamplingError(CvxMetricError):
    """Raised when interior sampling cannot produce the requested points."""


class GeneratorError(CvxMetricError):
    """Raised when a fixture generator cannot build a well-conditioned fixture."""


class RangeViolation(CvxMetricError):
    """Raised when a bounded function evaluates outside its declared range."""

    def __init__(self, message: str, point=None, value: float | None = None):
        super().__init__(message)
        self.point = point
        self.value = value


class ClampedPointError(CvxMetricError):
    """Raised when a subgradient is requested where the floor clamp is active."""
