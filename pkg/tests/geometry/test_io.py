import json

import numpy as np
import pytest

from cvxmetric.errors import BodyFormatError, DegenerateBodyError, DimensionError
from cvxmetric.geometry import (
    Ball,
    HPolytope,
    VPolytope,
    body_from_dict,
    body_to_dict,
    dump_body,
    load_body,
    load_points,
    tau,
)
from cvxmetric.geometry.io import dump_points, parse_point


def test_round_trip_all_kinds(tmp_path):
    bodies = [
        HPolytope([[1.0], [-1.0]], [1.0, 0.0]),
        VPolytope([[0.1, 0.0], [1.0, 0.3], [0.2, 0.9]]),
        Ball([0.5, -0.25], 1.0 / 3.0),
    ]
    for body in bodies:
        path = tmp_path / f"{body.kind}.json"
        path.write_text(dump_body(body))
        reloaded = load_body(path)
        assert type(reloaded) is type(body)
        assert body_to_dict(reloaded) == body_to_dict(body)


def test_round_trip_gives_identical_tau(tmp_path):
    body = Ball([0.1, 0.2], 0.7)
    path = tmp_path / "ball.json"
    path.write_text(dump_body(body))
    x, y = [0.15, 0.1], [0.3, 0.35]
    assert tau(load_body(path), x, y) == tau(body, x, y)


def test_unknown_type():
    with pytest.raises(BodyFormatError, match="Unknown body type"):
        body_from_dict({"type": "ellipsoid"})


def test_missing_keys():
    with pytest.raises(BodyFormatError, match="missing keys"):
        body_from_dict({"type": "hpolytope", "A": [[1.0]]})


def test_not_an_object(tmp_path):
    path = tmp_path / "list.json"
    path.write_text("[1, 2]")
    with pytest.raises(BodyFormatError, match="JSON object"):
        load_body(path)


def test_malformed_json_reports_line_and_column(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"type": "ball",\n "center": [0, 0],\n "radius": }\n')
    with pytest.raises(BodyFormatError) as err:
        load_body(path)
    assert err.value.line == 3
    assert err.value.column is not None
    assert "line 3" in str(err.value)


def test_ragged_matrix_is_format_error():
    with pytest.raises(BodyFormatError, match="Invalid hpolytope"):
        body_from_dict({"type": "hpolytope", "A": [[1.0, 0.0], [1.0]], "b": [1, 1]})


def test_invariant_violations_keep_their_type():
    with pytest.raises(DegenerateBodyError):
        body_from_dict({"type": "ball", "center": [0.0], "radius": -1.0})
    with pytest.raises(DegenerateBodyError):
        body_from_dict({"type": "hpolytope", "A": [[0.0]], "b": [1.0]})
    with pytest.raises(DimensionError):
        body_from_dict({"type": "hpolytope", "A": [[1.0]], "b": [1.0, 2.0]})


def test_dimension_limit():
    with pytest.raises(DimensionError):
        Ball(np.zeros(17), 1.0)


def test_parse_point():
    assert list(parse_point("0.5,0")) == [0.5, 0.0]
    assert list(parse_point("-1e-3", 1)) == [-0.001]
    with pytest.raises(BodyFormatError):
        parse_point("a,b")
    with pytest.raises(DimensionError):
        parse_point("1,2", 3)


def test_load_points(tmp_path):
    path = tmp_path / "points.csv"
    path.write_text("0.1,0.2\n\n0.3,0.4\n")
    points = load_points(path, 2)
    assert len(points) == 2
    assert list(points[1]) == [0.3, 0.4]


def test_load_points_bad_row(tmp_path):
    path = tmp_path / "points.csv"
    path.write_text("0.1,0.2\n0.3,x\n")
    with pytest.raises(BodyFormatError) as err:
        load_points(path, 2)
    assert err.value.line == 2


def test_dump_points_reloads_exactly(tmp_path):
    points = [np.array([0.1, 1.0 / 3.0]), np.array([-2.5, 1e-17])]
    path = tmp_path / "points.csv"
    path.write_text(dump_points(points))
    reloaded = load_points(path)
    assert all(np.array_equal(p, q) for p, q in zip(points, reloaded))


def test_dump_body_is_json():
    doc = json.loads(dump_body(Ball([0.0], 2.0)))
    assert doc == {"type": "ball", "center": [0.0], "radius": 2.0}
