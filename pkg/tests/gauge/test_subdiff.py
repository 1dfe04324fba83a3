import numpy as np
import pytest

from cvxmetric.errors import ClampedPointError, NotInteriorError
from cvxmetric.gauge import (
    GaugeFn,
    gauge_as_convex_fn,
    gauge_value,
    hrep_contains,
    max_subdiff_contains,
    max_subdiff_hrep,
    max_subdiff_membership,
    max_subdiff_support,
    subgradient_of_max_affine,
)
from cvxmetric.geometry import (
    Ball,
    VPolytope,
    lp_maximize,
    sample_interior,
    support_function,
)
from cvxmetric.oracles import (
    BODY_KINDS,
    max_affine_fn,
    random_body,
    random_convex_fn,
    rng_stream,
)


class TestGauge:
    def test_ball_center_is_norm(self, unit_ball):
        g = GaugeFn(unit_ball, [0.0, 0.0])
        assert gauge_value(g, [0.5, 0.0]) == pytest.approx(0.5)

    def test_interval(self, interval):
        assert gauge_value(GaugeFn(interval, [0.5]), [0.75]) == 0.5

    def test_center(self, square_v):
        g = GaugeFn(square_v, [0.1, 0.2])
        assert g([0.1, 0.2]) == 0.0

    def test_homogeneous(self, square_h):
        center = np.array([0.2, -0.1])
        g = GaugeFn(square_h, center)
        x = np.array([0.7, 0.5])
        for s in (0.25, 0.5, 1.0):
            assert g(center + s * (x - center)) == pytest.approx(s * g(x), rel=1e-9)

    def test_convex_fn(self, unit_ball):
        f = gauge_as_convex_fn(GaugeFn(unit_ball, [0.0, 0.0]), 1.0, 3.0)
        assert f([0.0, 0.5]) == pytest.approx(2.0)


class TestMembership:
    def test_ball(self, unit_ball):
        assert max_subdiff_contains(unit_ball, [0.0, 0.0], [0.9, 0.0], 0.0, 1.0)
        assert not max_subdiff_contains(unit_ball, [0.0, 0.0], [1.1, 0.0], 0.0, 1.0)

    def test_square(self, square_v):
        result = max_subdiff_membership(square_v, [0.0, 0.0], [0.5, 0.5], 0.0, 1.0)
        assert result.member
        assert result.support_value.finite_value() == 1.0

    def test_range_scaling(self, unit_ball):
        assert max_subdiff_contains(unit_ball, [0.0, 0.0], [1.5, 0.0], 0.0, 2.0)

    def test_unbounded_direction(self, half_line):
        result = max_subdiff_membership(half_line, [1.0], [1.0], 0.0, 1.0)
        assert not result.member
        assert result.support_value.is_inf
        assert max_subdiff_contains(half_line, [1.0], [-1.0], 0.0, 1.0)

    def test_constant_range(self, unit_ball):
        zero = max_subdiff_support(unit_ball, [0.0, 0.0], [0.0, 0.0], 1.0, 1.0)
        assert zero.finite_value() == 0.0
        assert not max_subdiff_contains(unit_ball, [0.0, 0.0], [1e-3, 0.0], 1.0, 1.0)

    def test_center_not_interior(self, interval):
        with pytest.raises(NotInteriorError):
            max_subdiff_contains(interval, [1.0], [0.5], 0.0, 1.0)

    def test_subgradients_are_members(self, square_h):
        x0 = np.array([0.1, -0.3])
        for seed in range(20):
            f = random_convex_fn(square_h, -1.0, 1.0, 3, seed)
            try:
                zeta = subgradient_of_max_affine(f, x0)
            except ClampedPointError:
                continue
            assert max_subdiff_contains(square_h, x0, zeta, -1.0, 1.0)

    def test_outside_violates_gauge_inequality(self, unit_ball):
        x0 = np.zeros(2)
        zeta = np.array([1.2, 0.0])
        g = GaugeFn(unit_ball, x0)
        points = sample_interior(unit_ball, 4, 200)
        assert any(float(zeta @ (z - x0)) > g(z) + 1e-9 for z in points)


class TestHrep:
    def test_square_gives_diamond(self, square_v):
        hrep = max_subdiff_hrep(square_v, [0.0, 0.0], 0.0, 1.0)
        assert hrep.A.shape == (4, 2)
        assert np.all(hrep.b == 1.0)
        assert hrep_contains(hrep, [0.5, 0.5], 0.0, 1.0)
        assert not hrep_contains(hrep, [0.6, 0.5], 0.0, 1.0)

    def test_segment(self):
        segment = VPolytope([[-1.0], [1.0]])
        hrep = max_subdiff_hrep(segment, [0.0], 0.0, 1.0)
        assert sorted(hrep.A[:, 0].tolist()) == [-1.0, 1.0]
        assert hrep_contains(hrep, [1.0], 0.0, 1.0)
        assert not hrep_contains(hrep, [-1.01], 0.0, 1.0)

    def test_rhs_scales_with_range(self, square_v):
        hrep = max_subdiff_hrep(square_v, [0.0, 0.0], 0.0, 3.0)
        assert np.all(hrep.b == 3.0)

    def test_agrees_with_support(self, square_v):
        x0 = np.array([0.2, -0.1])
        hrep = max_subdiff_hrep(square_v, x0, 0.0, 1.0)
        rng = rng_stream(8, "zeta")
        for zeta in rng.uniform(-1.5, 1.5, (200, 2)):
            assert hrep_contains(hrep, zeta, 0.0, 1.0) == max_subdiff_contains(
                square_v, x0, zeta, 0.0, 1.0
            )


class TestSubgradient:
    @pytest.fixture
    def two_pieces(self, interval):
        """max(z, 2z - 0.3), never clamped on [0, 1]."""
        f = max_affine_fn(interval, [[1.0], [2.0]], [0.0, -0.3], 0.0, 1.7)
        assert f.peak == pytest.approx(1.7)
        return f

    def test_first_piece(self, two_pieces):
        assert subgradient_of_max_affine(two_pieces, [0.2]).tolist() == [1.0]

    def test_tie_takes_lowest_index(self, two_pieces):
        assert subgradient_of_max_affine(two_pieces, [0.3]).tolist() == [1.0]

    def test_second_piece(self, two_pieces):
        assert subgradient_of_max_affine(two_pieces, [0.5]).tolist() == [2.0]

    def test_clamped(self, interval):
        f = max_affine_fn(interval, [[1.0]], [-0.5], 0.0, 0.5)
        with pytest.raises(ClampedPointError):
            subgradient_of_max_affine(f, [0.2])


def _support_point(body, direction: np.ndarray) -> np.ndarray:
    if isinstance(body, VPolytope):
        return body.vertices[int(np.argmax(body.vertices @ direction))]
    if isinstance(body, Ball):
        return body.center + body.radius * direction / np.linalg.norm(direction)
    argmax = lp_maximize(direction, body.A, body.b).argmax
    assert argmax is not None
    return argmax


def _check_maximality_witness(n_cases: int, seed: int) -> None:
    # Odd cases put zeta outside the maximal subdifferential by 1% to 50%,
    # even cases inside by the same margins.
    for i in range(n_cases):
        kind = BODY_KINDS[i % len(BODY_KINDS)]
        dim = 1 + (i // len(BODY_KINDS)) % 3
        body = random_body(dim, kind, seed + i)
        rng = rng_stream(seed, "witness", i)
        (x0,) = sample_interior(body, seed + i, 1)
        m = float(rng.uniform(-1.0, 1.0))
        M = m + float(rng.uniform(0.1, 2.0))
        u = rng.standard_normal(dim)
        reach = support_function(body, u).finite_value() - float(u @ x0)
        c = rng.uniform(1.01, 1.5) if i % 2 else rng.uniform(0.5, 0.99)
        zeta = (M - m) * c * u / reach

        g = GaugeFn(body, x0)
        candidates = sample_interior(body, seed + 1000 + i, 8)
        candidates.append(x0 + 0.5 * (_support_point(body, u) - x0))
        witnessed = any(
            float(zeta @ (z - x0)) > (M - m) * g(z) + 1e-9 for z in candidates
        )
        assert max_subdiff_contains(body, x0, zeta, m, M) == (not witnessed)


def test_maximality_witness_agrees_with_membership():
    _check_maximality_witness(60, seed=2)


@pytest.mark.acceptance
def test_maximality_witness_full_size():
    _check_maximality_witness(500, seed=0)
