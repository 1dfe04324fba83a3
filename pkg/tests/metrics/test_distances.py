import math
from unittest.mock import patch

import numpy as np
import pytest

from cvxmetric.errors import NearBoundaryError, NotInteriorError
from cvxmetric.geometry import POS_INF, ExtReal, tau_from_norms
from cvxmetric.metrics import (
    Metric,
    distance_matrix,
    distances,
    funk,
    funk_from_tau,
    funk_ratio,
    hilbert,
    thompson,
)


class TestFunk:
    def test_interval(self, interval):
        assert funk(interval, [0.25], [0.5]).value == pytest.approx(math.log(1.5))

    def test_same_point(self, unit_ball):
        assert funk(unit_ball, [0.2, 0.1], [0.2, 0.1]).value == 0.0

    def test_recession_direction(self, half_line):
        assert funk(half_line, [1.0], [2.0]).value == 0.0

    def test_not_symmetric(self, unit_ball):
        forward = funk(unit_ball, [0.0, 0.0], [0.5, 0.0]).value
        backward = funk(unit_ball, [0.5, 0.0], [0.0, 0.0]).value
        assert forward == pytest.approx(math.log(2.0))
        assert backward == pytest.approx(math.log(1.5))

    def test_boundary_target(self, interval):
        with pytest.raises(NotInteriorError):
            funk(interval, [0.25], [1.0])


class TestFunkFromTau:
    def test_inf(self):
        assert funk_from_tau(POS_INF).value == 0.0

    def test_formula(self):
        assert funk_from_tau(ExtReal.finite(3.0)).value == pytest.approx(
            math.log(1.5), abs=1e-15
        )

    def test_saturation(self):
        result = funk_from_tau(ExtReal.finite(1e13))
        assert result.value == 0.0
        assert result.saturated

    def test_large_tau_keeps_precision(self):
        # log1p form: F ~ 1/tau for large tau.
        result = funk_from_tau(ExtReal.finite(1e10))
        assert not result.saturated
        assert result.value == pytest.approx(1e-10, rel=1e-9)


class TestFunkRatio:
    def test_ball(self, unit_ball):
        assert funk_ratio(unit_ball, [0.0, 0.0], [0.5, 0.0]).value == pytest.approx(
            math.log(2.0)
        )
        assert funk_ratio(unit_ball, [0.5, 0.0], [0.0, 0.0]).value == pytest.approx(
            math.log(1.5)
        )

    def test_same_point(self, unit_ball):
        assert funk_ratio(unit_ball, [0.3, 0.0], [0.3, 0.0]).value == 0.0

    def test_agrees_with_funk(self, square_h):
        x, y = [0.1, -0.4], [0.6, 0.2]
        assert funk_ratio(square_h, x, y).value == pytest.approx(
            funk(square_h, x, y).value, rel=1e-12
        )

    def test_recovers_tau_from_boundary_point(self, interval):
        with patch.object(distances, "tau_from_norms", wraps=tau_from_norms) as spy:
            value = funk_ratio(interval, [0.25], [0.5]).value
        assert spy.call_count == 1
        assert spy.call_args.args[2].tolist() == pytest.approx([1.0])
        assert value == pytest.approx(math.log(1.5))


class TestSymmetrizations:
    def test_thompson_interval(self, interval):
        assert thompson(interval, [0.25], [0.5]).value == pytest.approx(math.log(2.0))

    def test_thompson_ball(self, unit_ball):
        assert thompson(unit_ball, [0.0, 0.0], [0.5, 0.0]).value == pytest.approx(
            math.log(2.0)
        )

    def test_hilbert_ball(self, unit_ball):
        assert hilbert(unit_ball, [0.0, 0.0], [0.5, 0.0]).value == pytest.approx(
            0.5 * math.log(3.0)
        )

    def test_hilbert_interval(self, interval):
        assert hilbert(interval, [0.25], [0.5]).value == pytest.approx(
            0.5 * (math.log(1.5) + math.log(2.0))
        )

    def test_same_point(self, square_v):
        p = [0.1, 0.2]
        assert thompson(square_v, p, p).value == 0.0
        assert hilbert(square_v, p, p).value == 0.0

    def test_symmetric(self, square_h):
        x, y = [0.3, -0.2], [-0.5, 0.4]
        assert thompson(square_h, x, y) == thompson(square_h, y, x)
        assert hilbert(square_h, x, y) == hilbert(square_h, y, x)

    def test_hilbert_between_half_and_full_thompson(self, unit_ball):
        x, y = [0.1, 0.7], [-0.4, -0.2]
        T = thompson(unit_ball, x, y).value
        H = hilbert(unit_ball, x, y).value
        assert H <= T <= 2.0 * H


class TestDistanceMatrix:
    def test_single_point(self, unit_ball):
        assert distance_matrix(unit_ball, [[0.1, 0.1]]).tolist() == [[0.0]]

    def test_hilbert_symmetric(self, unit_ball):
        D = distance_matrix(unit_ball, [[0.0, 0.0], [0.5, 0.0]], Metric.HILBERT)
        assert D.shape == (2, 2)
        assert np.array_equal(D, D.T)
        assert D[0, 0] == D[1, 1] == 0.0
        assert D[0, 1] == pytest.approx(0.5 * math.log(3.0))

    def test_funk_entries(self, unit_ball):
        points = [[0.0, 0.0], [0.5, 0.1], [-0.3, 0.6]]
        D = distance_matrix(unit_ball, points, "funk")
        for i, p in enumerate(points):
            for j, q in enumerate(points):
                if i != j:
                    assert D[i, j] == funk(unit_ball, p, q).value

    def test_thompson_is_max_of_funk(self, square_h):
        points = [[0.0, 0.0], [0.5, 0.1], [-0.3, 0.6]]
        F = distance_matrix(square_h, points, Metric.FUNK)
        T = distance_matrix(square_h, points, Metric.THOMPSON)
        assert np.array_equal(T, np.maximum(F, F.T))

    def test_boundary_point_reports_index(self, interval):
        with pytest.raises(NearBoundaryError) as err:
            distance_matrix(interval, [[0.5], [1.0]])
        assert err.value.index == 1

    def test_unknown_metric(self, interval):
        with pytest.raises(ValueError):
            distance_matrix(interval, [[0.5]], "euclid")
