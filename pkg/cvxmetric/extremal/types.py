from dataclasses import dataclass, field
from enum import Enum

from cvxmetric.bounds import BoundedConvexFn
from cvxmetric.geometry import ConvexBody, ExtReal, Vector


class Orientation(Enum):
    UPPER = "upper"
    LOWER = "lower"


@dataclass(frozen=True, eq=False)
class ExtremalFn(BoundedConvexFn):
    """Convex function attaining a variation bound at an anchor pair.

    ``base`` is where the function equals m; ``u`` is tau(base, target)
    times (target - base), or None for the constant function m.
    """

    body: ConvexBody = field(repr=False)
    x: Vector
    y: Vector
    m: float
    M: float
    orientation: Orientation
    tau: ExtReal
    u: Vector | None

    @property
    def base(self) -> Vector:
        return self.x if self.orientation is Orientation.UPPER else self.y

    @property
    def is_constant(self) -> bool:
        return self.u is None

    def __call__(self, z: Vector) -> float:
        # Deferred: construction imports this module.
        from .construction import eval_extremal

        return eval_extremal(self, z)


@dataclass(frozen=True)
class Attainment:
    upper_attained: bool
    lower_attained: bool
    upper_difference: float
    lower_difference: float
    upper_target: float
    lower_target: float
