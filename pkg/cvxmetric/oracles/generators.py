"""Seeded fixture generators.

Every generator draws from ``rng_stream(seed, *keys)``: a Philox stream
keyed by the seed and a purpose label, so that each generator (and each
test shard) is reproducible on its own.
"""

import hashlib
import logging
import math

import numpy as np

from cvxmetric.bounds import CallableConvexFn
from cvxmetric.errors import DimensionError, GeneratorError
from cvxmetric.geometry import (
    Ball,
    ConvexBody,
    HPolytope,
    Vector,
    VPolytope,
    is_interior,
    sample_interior,
    support_function,
)
from cvxmetric.geometry.body import MAX_REJECTIONS, SAMPLE_SHRINK
from cvxmetric.geometry.types import MAX_DIM

from .types import PiecewiseAffineConvexFn

logger = logging.getLogger(__name__)

MAX_RETRIES = 50
BODY_KINDS = ("hpolytope", "vpolytope", "ball")
# Radius of the coordinate cross every generated V-polytope must contain.
_MIN_SPREAD = 0.05
# Cosine above which two facet normals are too close to keep.
_MAX_NORMAL_COSINE = 0.9999


def _key_to_int(key: int | str) -> int:
    if isinstance(key, int):
        return key
    digest = hashlib.blake2b(key.encode(), digest_size=8).digest()
    return int.from_bytes(digest, "little")


def rng_stream(seed: int, *keys: int | str) -> np.random.Generator:
    entropy = [seed, *(_key_to_int(k) for k in keys)]
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(entropy)))


def _random_ball(dim: int, rng: np.random.Generator) -> Ball:
    return Ball(rng.uniform(-1.0, 1.0, dim), rng.uniform(0.5, 2.0))


def _random_vpolytope(dim: int, rng: np.random.Generator) -> VPolytope | None:
    k = int(rng.integers(dim + 2, 3 * dim, endpoint=True))
    points = rng.standard_normal((k, dim))
    points -= points.mean(axis=0)
    body = VPolytope(points)
    if not body.is_full_dimensional:
        return None
    if not is_interior(body, np.zeros(dim), margin=_MIN_SPREAD):
        return None
    return body


def _random_hpolytope(dim: int, rng: np.random.Generator) -> HPolytope | None:
    k = int(rng.integers(2 * dim, 4 * dim, endpoint=True))
    normals = rng.standard_normal((k, dim))
    normals /= np.linalg.norm(normals, axis=1, keepdims=True)
    cosines = normals @ normals.T
    np.fill_diagonal(cosines, -1.0)
    if np.max(cosines) > _MAX_NORMAL_COSINE:
        return None
    # Tangent halfspaces of the unit sphere.
    body = HPolytope(normals, np.ones(k))
    lo, hi = body.bounding_box
    if not (np.all(np.isfinite(lo)) and np.all(np.isfinite(hi))):
        return None
    return body


_BUILDERS = {
    "ball": _random_ball,
    "vpolytope": _random_vpolytope,
    "hpolytope": _random_hpolytope,
}


def random_body(dim: int, kind: str, rng_seed: int) -> ConvexBody:
    """Well-conditioned random body of the given representation."""
    if not 1 <= dim <= MAX_DIM:
        raise DimensionError(f"dim must lie in [1, {MAX_DIM}], got {dim}")
    if kind not in _BUILDERS:
        raise ValueError(f"Unknown body kind {kind!r}; expected one of {BODY_KINDS}")
    rng = rng_stream(rng_seed, "body", kind, dim)
    for attempt in range(MAX_RETRIES):
        body = _BUILDERS[kind](dim, rng)
        if body is not None:
            return body
        logger.debug("random_body(%d, %s): attempt %d rejected", dim, kind, attempt)
    raise GeneratorError(
        f"No well-conditioned {kind} in dimension {dim} after {MAX_RETRIES} tries"
    )


def _exact_peak(body: ConvexBody, G: np.ndarray, c: np.ndarray) -> float:
    """max of h over the body: attained at a vertex, or piecewise via support."""
    if isinstance(body, VPolytope):
        return float(np.max(body.vertices @ G.T + c))
    peaks = []
    for g, ci in zip(G, c):
        s = support_function(body, g)
        if s.is_inf:
            raise GeneratorError("Body is unbounded along a piece gradient")
        peaks.append(s.finite_value() + float(ci))
    return max(peaks)


def _floor_estimate(body: ConvexBody, G: np.ndarray, c: np.ndarray) -> float:
    """Lower bound on min h: exact over vertices, else the best single piece."""
    if isinstance(body, VPolytope):
        return float(np.min(np.max(body.vertices @ G.T + c, axis=1)))
    floors = []
    for g, ci in zip(G, c):
        s = support_function(body, -g)
        if s.is_inf:
            raise GeneratorError("Body is unbounded along a piece gradient")
        floors.append(float(ci) - s.finite_value())
    return max(floors)


def max_affine_fn(
    body: ConvexBody,
    gradients,
    offsets,
    m: float,
    M: float,
    scale: float = 1.0,
) -> PiecewiseAffineConvexFn:
    """Clamped max-of-affine function with its peak computed over ``body``."""
    G = np.array(gradients, dtype=float, ndmin=2)
    c = np.array(offsets, dtype=float, ndmin=1)
    if G.shape[1] != body.dim:
        raise DimensionError(f"Gradients have dimension {G.shape[1]}, not {body.dim}")
    return PiecewiseAffineConvexFn(G, c, m, M, scale, _exact_peak(body, G, c))


def random_convex_fn(
    body: ConvexBody, m: float, M: float, n_pieces: int, rng_seed: int
) -> PiecewiseAffineConvexFn:
    if not m < M:
        raise ValueError(f"Need m < M, got m={m}, M={M}")
    if n_pieces < 1:
        raise ValueError(f"n_pieces must be at least 1, got {n_pieces}")
    if isinstance(body, VPolytope) and not body.is_full_dimensional:
        raise GeneratorError("Vertex set is degenerate (not full-dimensional)")
    rng = rng_stream(rng_seed, "convex_fn", n_pieces)
    G = rng.standard_normal((n_pieces, body.dim))
    c = 0.5 * rng.standard_normal(n_pieces)
    peak = _exact_peak(body, G, c)
    spread = peak - _floor_estimate(body, G, c)
    scale = rng.uniform(0.5, 2.0) * (M - m) / (1.0 + spread)
    return PiecewiseAffineConvexFn(G, c, m, M, scale, peak)


def random_pairs(
    body: ConvexBody,
    count: int,
    rng_seed: int,
    shrink: float = SAMPLE_SHRINK,
    max_rejections: int = MAX_REJECTIONS,
) -> list[tuple[Vector, Vector]]:
    points = sample_interior(body, rng_seed, 2 * count, shrink, max_rejections)
    return list(zip(points[0::2], points[1::2]))


BUILTIN_FNS = ("linear", "square", "sin", "zero")


def builtin_fn(name: str, body: ConvexBody) -> CallableConvexFn:
    """Named test functions on the first coordinate, rescaled to [0, 1].

    ``sin`` is not convex and exists to be caught by ``certify``.
    """
    if name == "zero":
        return CallableConvexFn(lambda z: 0.0, 0.0, 0.0)
    if name == "sin":
        return CallableConvexFn(lambda z: 0.5 * (math.sin(6.0 * z[0]) + 1.0), 0.0, 1.0)
    if name not in BUILTIN_FNS:
        raise ValueError(f"Unknown function {name!r}; expected one of {BUILTIN_FNS}")

    lo, hi = body.bounding_box
    lo0, hi0 = float(lo[0]), float(hi[0])
    if not (math.isfinite(lo0) and math.isfinite(hi0)):
        raise GeneratorError(f"{name!r} needs a body bounded along the first axis")
    width = hi0 - lo0

    def unit(z: Vector) -> float:
        return min(max((z[0] - lo0) / width, 0.0), 1.0)

    if name == "linear":
        return CallableConvexFn(unit, 0.0, 1.0)
    return CallableConvexFn(lambda z: unit(z) ** 2, 0.0, 1.0)
