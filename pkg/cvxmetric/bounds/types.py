from abc import ABC, abstractmethod
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from cvxmetric.geometry import Vector


class BoundedConvexFn(ABC):
    """A function claimed convex on the body with values in [m, M].

    Convexity is the caller's claim; ``certify`` can only falsify it.
    """

    m: float
    M: float

    @abstractmethod
    def __call__(self, z: Vector) -> float:
        pass


@dataclass(frozen=True)
class CallableConvexFn(BoundedConvexFn):
    evaluate: Callable[[Vector], float]
    m: float
    M: float

    def __call__(self, z: Vector) -> float:
        return float(self.evaluate(np.asarray(z, dtype=float)))


@dataclass(frozen=True)
class BoundsInterval:
    lower: float
    upper: float
    m: float
    M: float

    def contains(self, value: float, tol: float = 0.0) -> bool:
        return self.lower - tol <= value <= self.upper + tol


@dataclass(frozen=True)
class MetricFormBounds:
    """Bounds on f(y) - f(x) rewritten with the Funk, Thompson and Hilbert
    metrics; the last two bound |f(y) - f(x)|."""

    funk_form: BoundsInterval
    thompson_bound: float
    hilbert_bound: float


@dataclass(frozen=True)
class BoundReport:
    x: Vector
    y: Vector
    observed: float
    interval: BoundsInterval
    slack_lower: float
    slack_upper: float
    passed: bool

    def to_record(self) -> dict:
        return {
            "pair": [self.x, self.y],
            "observed": self.observed,
            "interval": self.interval,
            "slack_lower": self.slack_lower,
            "slack_upper": self.slack_upper,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class LipschitzCertificate:
    x: Vector
    y: Vector
    lhs: float
    thompson_rhs: float
    hilbert_rhs: float
    thompson_pass: bool
    hilbert_pass: bool

    @property
    def passed(self) -> bool:
        return self.thompson_pass and self.hilbert_pass

    def to_record(self) -> dict:
        return {
            "pair": [self.x, self.y],
            "lhs": self.lhs,
            "T_rhs": self.thompson_rhs,
            "H_rhs": self.hilbert_rhs,
            "pass": self.passed,
        }
