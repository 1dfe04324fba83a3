"""Body JSON schema and point CSV I/O.

Body documents:
  {"type": "hpolytope", "A": [[...]], "b": [...]}
  {"type": "vpolytope", "vertices": [[...]]}
  {"type": "ball", "center": [...], "radius": r}
"""

import csv
import json
from pathlib import Path

import numpy as np

from cvxmetric.errors import BodyFormatError, DegenerateBodyError, DimensionError

from .types import Ball, ConvexBody, HPolytope, Vector, VPolytope, as_vector

_REQUIRED_KEYS = {
    "hpolytope": ("A", "b"),
    "vpolytope": ("vertices",),
    "ball": ("center", "radius"),
}


def body_to_dict(body: ConvexBody) -> dict:
    if isinstance(body, HPolytope):
        return {"type": "hpolytope", "A": body.A.tolist(), "b": body.b.tolist()}
    if isinstance(body, VPolytope):
        return {"type": "vpolytope", "vertices": body.vertices.tolist()}
    return {"type": "ball", "center": body.center.tolist(), "radius": body.radius}


def body_from_dict(data) -> ConvexBody:
    if not isinstance(data, dict):
        raise BodyFormatError("Body document must be a JSON object")
    kind = data.get("type")
    if kind not in _REQUIRED_KEYS:
        raise BodyFormatError(
            f"Unknown body type {kind!r}; expected one of {sorted(_REQUIRED_KEYS)}"
        )
    missing = [k for k in _REQUIRED_KEYS[kind] if k not in data]
    if missing:
        raise BodyFormatError(f"Body of type {kind!r} is missing keys {missing}")
    try:
        if kind == "hpolytope":
            return HPolytope(data["A"], data["b"])
        if kind == "vpolytope":
            return VPolytope(data["vertices"])
        return Ball(data["center"], data["radius"])
    except (DimensionError, DegenerateBodyError):
        raise
    except (TypeError, ValueError) as e:
        raise BodyFormatError(f"Invalid {kind} data: {e}") from e


def loads_document(text: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise BodyFormatError(f"Malformed JSON: {e.msg}", e.lineno, e.colno) from e
    if not isinstance(data, dict):
        raise BodyFormatError("Body document must be a JSON object")
    return data


def load_body(path: Path | str) -> ConvexBody:
    return body_from_dict(loads_document(Path(path).read_text()))


def dump_body(body: ConvexBody) -> str:
    return json.dumps(body_to_dict(body))


def parse_point(text: str, dim: int | None = None) -> Vector:
    """Parse a comma-separated point such as ``0.5,0``."""
    try:
        values = [float(part) for part in text.split(",")]
    except ValueError as e:
        raise BodyFormatError(f"Invalid point {text!r}: {e}") from e
    return as_vector(values, dim)


def load_points(path: Path | str, dim: int | None = None) -> list[Vector]:
    """One point per CSV row, no header."""
    points = []
    with open(path, newline="") as f:
        for lineno, row in enumerate(csv.reader(f), start=1):
            if not row or all(not cell.strip() for cell in row):
                continue
            try:
                values = [float(cell) for cell in row]
            except ValueError as e:
                raise BodyFormatError(f"Invalid point row: {e}", lineno, 1) from e
            points.append(as_vector(values, dim))
    return points


def dump_points(points: list[Vector]) -> str:
    return "\n".join(",".join(repr(float(v)) for v in np.asarray(p)) for p in points)
