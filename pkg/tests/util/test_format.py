import json
import math

import numpy as np
import pytest

from cvxmetric.geometry import POS_INF, ExtReal
from cvxmetric.metrics import Metric
from cvxmetric.util.format import (
    INF_TOKEN,
    dumps,
    format_csv_rows,
    format_matrix,
    format_real,
    json_real,
    to_jsonable,
)


def test_format_real_uses_17_significant_digits():
    assert format_real(0.1) == "0.10000000000000001"
    assert format_real(3.0) == "3"


def test_format_real_inf_token():
    assert format_real(POS_INF) == INF_TOKEN
    assert format_real(math.inf) == "inf"
    assert format_real(ExtReal.finite(2.5)) == "2.5"


def test_json_real_shortest_round_trip():
    assert json_real(0.1) == 0.1
    assert json_real(POS_INF) == "inf"
    assert json.dumps({"tau": json_real(ExtReal.finite(3.0))}) == '{"tau": 3.0}'


def test_to_jsonable_nested():
    data = {
        "t": POS_INF,
        "v": np.array([1.0, 2.0]),
        "metric": Metric.HILBERT,
        "n": np.int64(3),
        "flag": np.bool_(True),
        "pair": (np.float64(0.5), 1.0),
    }
    assert to_jsonable(data) == {
        "t": "inf",
        "v": [1.0, 2.0],
        "metric": "hilbert",
        "n": 3,
        "flag": True,
        "pair": [0.5, 1.0],
    }


def test_dumps_round_trips_through_json():
    text = dumps({"hilbert": 0.5 * math.log(3.0)})
    assert json.loads(text)["hilbert"] == 0.5 * math.log(3.0)


def test_format_csv_rows():
    assert format_csv_rows([[0.25, 1.0], [0.5, 0.0]]) == "0.25,1\n0.5,0"


def test_format_matrix_styles():
    matrix = np.array([[0.0, 1.5], [2.0, 0.0]])
    assert json.loads(format_matrix(matrix, "json")) == [[0.0, 1.5], [2.0, 0.0]]
    assert format_matrix(matrix, "csv") == "0,1.5\n2,0"


def test_format_matrix_unknown_style():
    with pytest.raises(ValueError, match="Unknown matrix format"):
        format_matrix([[0.0]], "xml")
