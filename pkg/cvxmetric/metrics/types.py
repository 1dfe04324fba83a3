from dataclasses import dataclass
from enum import Enum


class Metric(Enum):
    FUNK = "funk"
    THOMPSON = "thompson"
    HILBERT = "hilbert"


@dataclass(frozen=True)
class MetricValue:
    """A finite, nonnegative log-scale distance.

    ``saturated`` marks values where a finite but enormous tau was treated
    as +inf.
    """

    value: float
    saturated: bool = False

    def __float__(self) -> float:
        return self.value
