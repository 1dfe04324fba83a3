from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import ClassVar

import numpy as np
from numpy.typing import NDArray

from cvxmetric.errors import (
    DegenerateBodyError,
    DimensionError,
    UnboundedDirectionError,
)

MAX_DIM = 16

Vector = NDArray[np.float64]


def as_vector(values, dim: int | None = None) -> Vector:
    """Coerce a sequence of reals to a read-only float vector."""
    v = np.array(values, dtype=float, ndmin=1)
    if v.ndim != 1:
        raise DimensionError(f"Expected a vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise DegenerateBodyError("Vector entries must be finite")
    if dim is not None and v.shape[0] != dim:
        raise DimensionError(f"Expected dimension {dim}, got {v.shape[0]}")
    v.setflags(write=False)
    return v


def _as_matrix(values, name: str) -> NDArray[np.float64]:
    a = np.array(values, dtype=float, ndmin=2)
    if a.ndim != 2 or a.shape[0] == 0 or a.shape[1] == 0:
        raise DegenerateBodyError(f"{name} must be a nonempty matrix")
    if not np.all(np.isfinite(a)):
        raise DegenerateBodyError(f"{name} entries must be finite")
    if a.shape[1] > MAX_DIM:
        raise DimensionError(f"Dimension {a.shape[1]} exceeds {MAX_DIM}")
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class ExtReal:
    """A real number or +inf, kept as an explicit variant.

    ``value is None`` encodes +inf so that infinity never enters arithmetic
    by accident; callers branch on ``is_inf``.
    """

    value: float | None

    @classmethod
    def finite(cls, value: float) -> "ExtReal":
        return cls(float(value))

    @property
    def is_inf(self) -> bool:
        return self.value is None

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def finite_value(self) -> float:
        if self.value is None:
            raise UnboundedDirectionError("Value is +inf")
        return self.value

    def reciprocal(self) -> float:
        """1/value with 1/inf = 0."""
        if self.value is None:
            return 0.0
        return 1.0 / self.value

    def to_json(self) -> float | str:
        return "inf" if self.value is None else self.value

    def __repr__(self) -> str:
        return "ExtReal(inf)" if self.value is None else f"ExtReal({self.value!r})"


POS_INF = ExtReal(None)


@dataclass(frozen=True, eq=False)
class HPolytope:
    """Intersection of halfspaces ``A p <= b``."""

    A: NDArray[np.float64]
    b: Vector

    kind: ClassVar[str] = "hpolytope"

    def __post_init__(self):
        A = _as_matrix(self.A, "A")
        b = as_vector(self.b)
        if b.shape[0] != A.shape[0]:
            raise DimensionError(f"A has {A.shape[0]} rows but b has {b.shape[0]}")
        norms = np.linalg.norm(A, axis=1)
        if np.any(norms == 0.0):
            raise DegenerateBodyError("HPolytope rows must have nonzero normals")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)

    @property
    def dim(self) -> int:
        return self.A.shape[1]

    @cached_property
    def row_norms(self) -> Vector:
        return np.linalg.norm(self.A, axis=1)

    @cached_property
    def bounding_box(self) -> tuple[Vector, Vector]:
        # Deferred: lp imports this module.
        from .lp import lp_maximize

        lo = np.empty(self.dim)
        hi = np.empty(self.dim)
        for i in range(self.dim):
            e = np.zeros(self.dim)
            e[i] = 1.0
            for sign, out in ((1.0, hi), (-1.0, lo)):
                res = lp_maximize(sign * e, self.A, self.b)
                if res.status is LPStatus.INFEASIBLE:
                    raise DegenerateBodyError("HPolytope is empty")
                value = res.objective()
                out[i] = sign * np.inf if value.is_inf else sign * value.finite_value()
        return lo, hi

    @cached_property
    def scale(self) -> float:
        lo, hi = self.bounding_box
        if not (np.all(np.isfinite(lo)) and np.all(np.isfinite(hi))):
            return 1.0
        return float(np.linalg.norm(hi - lo)) or 1.0


@dataclass(frozen=True, eq=False)
class VPolytope:
    """Convex hull of a finite point set."""

    vertices: NDArray[np.float64]

    kind: ClassVar[str] = "vpolytope"

    def __post_init__(self):
        object.__setattr__(self, "vertices", _as_matrix(self.vertices, "vertices"))

    @property
    def dim(self) -> int:
        return self.vertices.shape[1]

    @cached_property
    def bounding_box(self) -> tuple[Vector, Vector]:
        return self.vertices.min(axis=0), self.vertices.max(axis=0)

    @cached_property
    def scale(self) -> float:
        lo, hi = self.bounding_box
        return float(np.linalg.norm(hi - lo)) or 1.0

    @cached_property
    def is_full_dimensional(self) -> bool:
        if self.vertices.shape[0] < self.dim + 1:
            return False
        diffs = self.vertices[1:] - self.vertices[0]
        return int(np.linalg.matrix_rank(diffs)) == self.dim


@dataclass(frozen=True, eq=False)
class Ball:
    """Euclidean ball ``||p - center|| <= radius``."""

    center: Vector
    radius: float

    kind: ClassVar[str] = "ball"

    def __post_init__(self):
        center = as_vector(self.center)
        if center.shape[0] > MAX_DIM:
            raise DimensionError(f"Dimension {center.shape[0]} exceeds {MAX_DIM}")
        radius = float(self.radius)
        if not np.isfinite(radius) or radius <= 0.0:
            raise DegenerateBodyError("Ball radius must be positive and finite")
        object.__setattr__(self, "center", center)
        object.__setattr__(self, "radius", radius)

    @property
    def dim(self) -> int:
        return self.center.shape[0]

    @property
    def bounding_box(self) -> tuple[Vector, Vector]:
        return self.center - self.radius, self.center + self.radius

    @property
    def scale(self) -> float:
        return 2.0 * self.radius


ConvexBody = HPolytope | VPolytope | Ball


@dataclass(frozen=True)
class RayExitResult:
    t: ExtReal
    boundary_point: Vector | None = None


class LPStatus(Enum):
    OPTIMAL = "optimal"
    UNBOUNDED = "unbounded"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class LPResult:
    status: LPStatus
    value: ExtReal | None
    argmax: Vector | None = None
    pivots: int = 0

    def objective(self) -> ExtReal:
        """Optimal value, +inf when unbounded; infeasible problems have none."""
        if self.value is None:
            raise ValueError(f"LP has no objective value (status {self.status.value})")
        return self.value
