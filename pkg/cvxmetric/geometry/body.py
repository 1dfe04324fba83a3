"""Membership, ray exit and support queries on convex bodies.

All entry points are pure: bodies are immutable and no query mutates them
(the cached bounding boxes are memoized derived data).
"""

import logging
import math

import numpy as np

from cvxmetric.errors import (
    DegenerateBodyError,
    DimensionError,
    NearBoundaryError,
    NotInteriorError,
    SamplingError,
    UnboundedDirectionError,
)

from .lp import FEAS_TOL, lp_maximize, lp_maximize_standard
from .types import (
    POS_INF,
    Ball,
    ConvexBody,
    ExtReal,
    HPolytope,
    LPStatus,
    RayExitResult,
    Vector,
    VPolytope,
    as_vector,
)

logger = logging.getLogger(__name__)

TOL_INT = 1e-9
NEAR_BOUNDARY = 1e-12
SAMPLE_SHRINK = 0.95
MAX_REJECTIONS = 10000
_UNBOUNDED_BOX_HALF_WIDTH = 10.0


def _point(body: ConvexBody, p) -> Vector:
    return as_vector(p, body.dim)


def _vpoly_residual(body: VPolytope, p: Vector) -> float:
    """L1 distance from ``p`` to the nearest convex combination of vertices."""
    k, n = body.vertices.shape
    # Columns: lambda (k), e+ (n), e- (n).
    A_eq = np.zeros((n + 1, k + 2 * n))
    A_eq[:n, :k] = body.vertices.T
    A_eq[:n, k : k + n] = np.eye(n)
    A_eq[:n, k + n :] = -np.eye(n)
    A_eq[n, :k] = 1.0
    b_eq = np.concatenate([p, [1.0]])
    c = np.concatenate([np.zeros(k), -np.ones(2 * n)])
    res = lp_maximize_standard(c, A_eq, b_eq)
    return -res.objective().finite_value()


def contains(body: ConvexBody, p, tol: float = 0.0) -> bool:
    """True iff ``p`` satisfies the body's constraints within ``tol``."""
    p = _point(body, p)
    if tol < 0:
        raise ValueError(f"tol must be nonnegative, got {tol}")
    if isinstance(body, HPolytope):
        return bool(np.all(body.A @ p <= body.b + tol))
    if isinstance(body, Ball):
        return bool(np.linalg.norm(p - body.center) <= body.radius + tol)
    return _vpoly_residual(body, p) <= tol + FEAS_TOL * body.scale


def is_interior(body: ConvexBody, p, margin: float | None = None) -> bool:
    """Strict interiority with ``margin`` (default TOL_INT times the body scale).

    V-polytopes are probed with the 2*dim points ``p +- step * e_i``, where
    step is ``margin`` plus the slack of the membership LP.
    """
    p = _point(body, p)
    if margin is None:
        margin = TOL_INT * body.scale
    if isinstance(body, HPolytope):
        slack = body.b - body.A @ p
        return bool(np.all(slack >= margin * body.row_norms))
    if isinstance(body, Ball):
        return bool(np.linalg.norm(p - body.center) <= body.radius - margin)
    # Probes must clear the membership slack along any facet normal.
    step = margin + 2.0 * math.sqrt(body.dim) * FEAS_TOL * body.scale
    for i in range(body.dim):
        for sign in (1.0, -1.0):
            q = p.copy()
            q[i] += sign * step
            if not contains(body, q):
                return False
    return True


def _require_interior(body: ConvexBody, p: Vector, tol_int: float) -> None:
    if not is_interior(body, p, tol_int * body.scale):
        raise NotInteriorError(f"Point {p.tolist()} is not strictly interior")


def _hpoly_exit(body: HPolytope, origin: Vector, direction: Vector) -> ExtReal:
    rates = body.A @ direction
    active = rates > 0.0
    if not np.any(active):
        return POS_INF
    slack = body.b[active] - body.A[active] @ origin
    return ExtReal.finite(max(float(np.min(slack / rates[active])), 0.0))


def _ball_exit(body: Ball, origin: Vector, direction: Vector) -> ExtReal:
    offset = origin - body.center
    a = float(direction @ direction)
    b = 2.0 * float(direction @ offset)
    c = float(offset @ offset) - body.radius**2
    disc = max(b * b - 4.0 * a * c, 0.0)
    q = -0.5 * (b + math.copysign(math.sqrt(disc), b))
    # c < 0 for interior origins, so the roots straddle zero.
    roots = [q / a]
    if q != 0.0:
        roots.append(c / q)
    return ExtReal.finite(max(max(roots), 0.0))


def _vpoly_exit(body: VPolytope, origin: Vector, direction: Vector) -> ExtReal | None:
    """Parametric LP: max t with origin + t*direction a convex combination.

    Returns None when the origin is outside the polytope.
    """
    k, n = body.vertices.shape
    # Columns: lambda (k), t.
    A_eq = np.zeros((n + 1, k + 1))
    A_eq[:n, :k] = body.vertices.T
    A_eq[:n, k] = -direction
    A_eq[n, :k] = 1.0
    b_eq = np.concatenate([origin, [1.0]])
    c = np.zeros(k + 1)
    c[k] = 1.0
    res = lp_maximize_standard(c, A_eq, b_eq)
    if res.status is LPStatus.INFEASIBLE:
        return None
    return res.objective()


def ray_exit(
    body: ConvexBody, origin, direction, tol_int: float = TOL_INT
) -> RayExitResult:
    """sup{t >= 0 : origin + t*direction in the closed body}."""
    origin = _point(body, origin)
    direction = _point(body, direction)

    if isinstance(body, VPolytope):
        # Interiority along the ray's line: both exits must leave room.
        backward = _vpoly_exit(body, origin, -direction)
        if backward is None:
            raise NotInteriorError(f"Point {origin.tolist()} is outside the body")
        if not np.any(direction):
            return RayExitResult(POS_INF)
        margin = tol_int * body.scale / float(np.linalg.norm(direction))
        forward = _vpoly_exit(body, origin, direction)
        if forward is None or forward.finite_value() <= margin:
            raise NotInteriorError(f"Point {origin.tolist()} is on the boundary")
        if backward.finite_value() <= margin:
            raise NotInteriorError(f"Point {origin.tolist()} is on the boundary")
        t = forward
    else:
        _require_interior(body, origin, tol_int)
        if not np.any(direction):
            return RayExitResult(POS_INF)
        if isinstance(body, HPolytope):
            t = _hpoly_exit(body, origin, direction)
        else:
            t = _ball_exit(body, origin, direction)

    if t.is_inf:
        return RayExitResult(POS_INF)
    point = origin + t.finite_value() * direction
    return RayExitResult(t, point)


def tau(
    body: ConvexBody,
    x,
    y,
    tol_int: float = TOL_INT,
    near_boundary: float = NEAR_BOUNDARY,
) -> ExtReal:
    """sup{t >= 1 : x + t(y - x) in the body}; +inf when x == y."""
    x = _point(body, x)
    y = _point(body, y)
    _require_interior(body, y, tol_int)
    result = ray_exit(body, x, y - x, tol_int=tol_int)
    if result.t.is_finite and result.t.finite_value() <= 1.0 + near_boundary:
        raise NearBoundaryError(
            f"tau = {result.t.finite_value()!r} <= 1 + {near_boundary:g}; "
            f"{y.tolist()} is not strictly interior"
        )
    return result.t


def tau_from_norms(x, y, b) -> float:
    """tau recovered from the boundary point: ||x - b|| / ||x - y||."""
    x, y, b = as_vector(x), as_vector(y), as_vector(b)
    return float(np.linalg.norm(x - b) / np.linalg.norm(x - y))


def boundary_point_b(body: ConvexBody, x, y, tol_int: float = TOL_INT) -> Vector:
    """b(x, y) = x + tau(x, y) (y - x), the exit point of the ray from x via y."""
    x = _point(body, x)
    y = _point(body, y)
    t = tau(body, x, y, tol_int=tol_int)
    if t.is_inf:
        raise UnboundedDirectionError(
            f"The ray from {x.tolist()} through {y.tolist()} never leaves the body"
        )
    return x + t.finite_value() * (y - x)


def support_function(body: ConvexBody, d) -> ExtReal:
    """sup over p in the body of <d, p>.

    Finite values may be negative; +inf only for unbounded H-polytopes.
    """
    d = _point(body, d)
    if isinstance(body, VPolytope):
        return ExtReal.finite(float(np.max(body.vertices @ d)))
    if isinstance(body, Ball):
        return ExtReal.finite(
            float(d @ body.center) + body.radius * float(np.linalg.norm(d))
        )
    res = lp_maximize(d, body.A, body.b)
    if res.status is LPStatus.INFEASIBLE:
        raise DegenerateBodyError("HPolytope is empty")
    return res.objective()


def chebyshev_center(body: HPolytope) -> tuple[Vector, float]:
    """Center and radius of the largest inscribed ball (radius capped for
    unbounded bodies)."""
    n = body.dim
    A = np.hstack([body.A, body.row_norms[:, None]])
    # Cap r so that unbounded bodies still give an optimal LP.
    cap = np.zeros((1, n + 1))
    cap[0, n] = 1.0
    A = np.vstack([A, cap])
    b = np.concatenate([body.b, [_UNBOUNDED_BOX_HALF_WIDTH]])
    c = np.zeros(n + 1)
    c[n] = 1.0
    res = lp_maximize(c, A, b)
    if res.status is not LPStatus.OPTIMAL or res.argmax is None:
        raise SamplingError("HPolytope has no interior")
    return res.argmax[:n], float(res.argmax[n])


def _rng(rng_seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(rng_seed))


def sample_interior(
    body: ConvexBody,
    rng_seed: int,
    count: int,
    shrink: float = SAMPLE_SHRINK,
    max_rejections: int = MAX_REJECTIONS,
) -> list[Vector]:
    """Deterministic interior points with margin, one stream per seed."""
    if count <= 0:
        raise ValueError(f"count must be positive, got {count}")
    if not 0.0 < shrink < 1.0:
        raise ValueError(f"shrink must lie in (0, 1), got {shrink}")
    rng = _rng(rng_seed)
    n = body.dim

    if isinstance(body, Ball):
        dirs = rng.standard_normal((count, n))
        dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)
        radii = body.radius * shrink * rng.random(count) ** (1.0 / n)
        return [body.center + r * u for r, u in zip(radii, dirs)]

    if isinstance(body, VPolytope):
        if not body.is_full_dimensional:
            raise SamplingError("VPolytope has no interior (not full-dimensional)")
        k = body.vertices.shape[0]
        weights = rng.dirichlet(np.ones(k), size=count)
        weights = shrink * weights + (1.0 - shrink) / k
        return [w @ body.vertices for w in weights]

    center, radius = chebyshev_center(body)
    if (1.0 - shrink) * radius <= TOL_INT * body.scale:
        raise SamplingError("HPolytope has no interior")
    # Radial candidates from the Chebyshev center stay inside by convexity;
    # the interior check only rejects chords that graze the boundary.
    points: list[Vector] = []
    rejections = 0
    while len(points) < count:
        u = rng.standard_normal(n)
        u /= np.linalg.norm(u)
        exit_t = _hpoly_exit(body, center, u)
        reach = _UNBOUNDED_BOX_HALF_WIDTH if exit_t.is_inf else exit_t.finite_value()
        p = center + shrink * reach * rng.random() ** (1.0 / n) * u
        if is_interior(body, p):
            points.append(p)
            continue
        rejections += 1
        if rejections > max_rejections:
            raise SamplingError(
                f"Rejection budget of {max_rejections} exhausted after "
                f"{len(points)} of {count} points"
            )
    logger.debug("sampled %d points with %d rejections", count, rejections)
    return points


def affine_image(body: ConvexBody, T, t) -> ConvexBody:
    """Image of the body under z -> T z + t (T invertible)."""
    T = np.array(T, dtype=float, ndmin=2)
    t = _point(body, t)
    if T.shape != (body.dim, body.dim):
        raise DimensionError(f"T must be {body.dim}x{body.dim}, got {T.shape}")
    if isinstance(body, HPolytope):
        A_new = np.linalg.solve(T.T, body.A.T).T
        return HPolytope(A_new, body.b + A_new @ t)
    if isinstance(body, VPolytope):
        return VPolytope(body.vertices @ T.T + t)
    gram = T.T @ T
    s2 = float(gram[0, 0])
    if not np.allclose(gram, s2 * np.eye(body.dim), rtol=1e-9, atol=1e-12):
        raise DegenerateBodyError(
            "A ball maps to a ball only under a scaled orthogonal map"
        )
    return Ball(T @ body.center + t, math.sqrt(s2) * body.radius)


def to_hpolytope(body: VPolytope) -> HPolytope:
    """Facet description of a 1-D or 2-D V-polytope."""
    V = body.vertices
    if body.dim == 1:
        return HPolytope([[1.0], [-1.0]], [V.max(), -V.min()])
    if body.dim != 2:
        raise DimensionError("to_hpolytope supports dim <= 2 only")
    hull = _convex_hull_2d(V)
    if len(hull) < 3:
        raise DegenerateBodyError("VPolytope is not full-dimensional")
    rows = []
    rhs = []
    for p, q in zip(hull, hull[1:] + hull[:1]):
        edge = q - p
        normal = np.array([edge[1], -edge[0]])
        rows.append(normal)
        rhs.append(float(normal @ p))
    return HPolytope(rows, rhs)


def _convex_hull_2d(points) -> list[Vector]:
    """Counter-clockwise hull by the monotone chain."""
    pts = sorted({(float(p[0]), float(p[1])) for p in points})

    def cross(o, a, b) -> float:
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[tuple[float, float]] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[tuple[float, float]] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return [np.array(p) for p in lower[:-1] + upper[:-1]]
