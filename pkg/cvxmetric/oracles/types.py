from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from cvxmetric.bounds import BoundedConvexFn
from cvxmetric.errors import DimensionError
from cvxmetric.geometry import Vector

# Relative gap under which two pieces count as tied.
TIE_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class PiecewiseAffineConvexFn(BoundedConvexFn):
    """f(z) = max(m, M - scale * (peak - h(z))) with h(z) = max_i <g_i, z> + c_i.

    ``peak`` must be the exact maximum of h over the body; then f is convex
    with values in [m, M].
    """

    gradients: NDArray[np.float64]
    offsets: Vector
    m: float
    M: float
    scale: float
    peak: float

    def __post_init__(self):
        G = np.array(self.gradients, dtype=float, ndmin=2)
        c = np.array(self.offsets, dtype=float, ndmin=1)
        if G.ndim != 2 or G.shape[0] == 0:
            raise DimensionError("Need at least one affine piece")
        if c.shape != (G.shape[0],):
            raise DimensionError(f"{G.shape[0]} gradients but {c.shape[0]} offsets")
        if not self.m <= self.M:
            raise ValueError(f"Need m <= M, got m={self.m}, M={self.M}")
        if not self.scale > 0.0:
            raise ValueError(f"scale must be positive, got {self.scale}")
        G.setflags(write=False)
        c.setflags(write=False)
        object.__setattr__(self, "gradients", G)
        object.__setattr__(self, "offsets", c)

    @property
    def dim(self) -> int:
        return self.gradients.shape[1]

    @property
    def n_pieces(self) -> int:
        return self.gradients.shape[0]

    def pieces(self) -> list[tuple[Vector, float]]:
        return [(g, float(c)) for g, c in zip(self.gradients, self.offsets)]

    def h(self, z: Vector) -> float:
        return float(np.max(self.gradients @ np.asarray(z, dtype=float) + self.offsets))

    def active_piece(self, z: Vector) -> int:
        """Index of the maximizing piece; ties go to the lowest index."""
        values = self.gradients @ np.asarray(z, dtype=float) + self.offsets
        best = values.max()
        tied = np.flatnonzero(values >= best - TIE_TOL * max(1.0, abs(best)))
        return int(tied[0])

    def __call__(self, z: Vector) -> float:
        return max(self.m, self.M - self.scale * (self.peak - self.h(z)))
