import json

import numpy as np
import pytest

from cvxmetric.errors import BodyFormatError
from cvxmetric.geometry import body_to_dict
from cvxmetric.oracles import (
    dump_fixture,
    fn_from_dict,
    fn_to_dict,
    load_fixture,
    random_body,
    random_convex_fn,
)


def test_round_trip(tmp_path):
    body = random_body(2, "vpolytope", 3)
    fn = random_convex_fn(body, -0.5, 1.5, 3, 9)
    path = tmp_path / "fixture.json"
    path.write_text(dump_fixture(body, fn))

    loaded_body, loaded_fn = load_fixture(path)
    assert body_to_dict(loaded_body) == body_to_dict(body)
    assert loaded_fn is not None
    assert np.array_equal(loaded_fn.gradients, fn.gradients)
    assert loaded_fn.peak == fn.peak
    assert (loaded_fn.m, loaded_fn.M, loaded_fn.scale) == (fn.m, fn.M, fn.scale)


def test_body_only(tmp_path, unit_ball):
    path = tmp_path / "ball.json"
    path.write_text(dump_fixture(unit_ball))
    body, fn = load_fixture(path)
    assert fn is None
    assert body.kind == "ball"


def test_fn_document_shape(square_v):
    fn = random_convex_fn(square_v, 0.0, 1.0, 2, 1)
    doc = json.loads(dump_fixture(square_v, fn))
    assert doc["type"] == "vpolytope"
    assert set(doc["fn"]) == {"pieces", "m", "M", "scale"}
    assert len(doc["fn"]["pieces"]) == 2


def test_scale_defaults_to_one(interval):
    fn = fn_from_dict({"pieces": [[[1.0], 0.0]], "m": 0, "M": 1}, interval)
    assert fn.scale == 1.0
    assert fn.peak == 1.0


def test_missing_keys(interval):
    with pytest.raises(BodyFormatError, match="missing keys"):
        fn_from_dict({"pieces": []}, interval)


def test_malformed_pieces(interval):
    with pytest.raises(BodyFormatError):
        fn_from_dict({"pieces": [[[1.0]]], "m": 0, "M": 1}, interval)


def test_fn_to_dict(interval):
    fn = fn_from_dict({"pieces": [[[2.0], -0.3]], "m": 0, "M": 2}, interval)
    assert fn_to_dict(fn) == {
        "pieces": [[[2.0], -0.3]],
        "m": 0.0,
        "M": 2.0,
        "scale": 1.0,
    }
