import dataclasses
import json
import math
from enum import Enum

import numpy as np

from cvxmetric.geometry.types import ExtReal

INF_TOKEN = "inf"


def format_real(value: float | ExtReal) -> str:
    """17 significant digits; +inf as the ``inf`` token."""
    if isinstance(value, ExtReal):
        if value.is_inf:
            return INF_TOKEN
        value = value.finite_value()
    if math.isinf(value) and value > 0:
        return INF_TOKEN
    return f"{value:.17g}"


def json_real(value: float | ExtReal) -> float | str:
    if isinstance(value, ExtReal):
        return value.to_json()
    if math.isinf(value) and value > 0:
        return INF_TOKEN
    return float(value)


def to_jsonable(obj):
    """Recursively convert dataclasses, arrays and ExtReal to JSON types."""
    if isinstance(obj, ExtReal):
        return obj.to_json()
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {
            f.name: to_jsonable(getattr(obj, f.name))
            for f in dataclasses.fields(obj)
            if f.repr
        }
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, np.ndarray):
        return [to_jsonable(v) for v in obj.tolist()]
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, (np.floating, float)):
        return json_real(float(obj))
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    return obj


def dumps(obj) -> str:
    return json.dumps(to_jsonable(obj))


def format_csv_rows(rows) -> str:
    return "\n".join(",".join(format_real(float(v)) for v in row) for row in rows)


def format_matrix(matrix, style: str = "json") -> str:
    if style == "json":
        return dumps([list(row) for row in matrix])
    if style == "csv":
        return format_csv_rows(matrix)
    raise ValueError(f"Unknown matrix format: {style}")
