"""Fixture documents: a body plus an optional convex function.

  {"type": "vpolytope", "vertices": [...],
   "fn": {"pieces": [[[g...], c], ...], "m": 0, "M": 1, "scale": s}}

The peak of h is not stored; it is recomputed from the body on load.
"""

import json
from pathlib import Path

from cvxmetric.errors import BodyFormatError
from cvxmetric.geometry import ConvexBody, body_from_dict, body_to_dict
from cvxmetric.geometry.io import loads_document

from .generators import max_affine_fn
from .types import PiecewiseAffineConvexFn


def fn_to_dict(fn: PiecewiseAffineConvexFn) -> dict:
    return {
        "pieces": [[g.tolist(), c] for g, c in fn.pieces()],
        "m": fn.m,
        "M": fn.M,
        "scale": fn.scale,
    }


def fn_from_dict(data, body: ConvexBody) -> PiecewiseAffineConvexFn:
    if not isinstance(data, dict):
        raise BodyFormatError("'fn' must be a JSON object")
    missing = [k for k in ("pieces", "m", "M") if k not in data]
    if missing:
        raise BodyFormatError(f"'fn' is missing keys {missing}")
    try:
        gradients = [piece[0] for piece in data["pieces"]]
        offsets = [piece[1] for piece in data["pieces"]]
        return max_affine_fn(
            body,
            gradients,
            offsets,
            float(data["m"]),
            float(data["M"]),
            float(data.get("scale", 1.0)),
        )
    except (TypeError, IndexError, KeyError) as e:
        raise BodyFormatError(f"Invalid 'fn' data: {e}") from e


def dump_fixture(body: ConvexBody, fn: PiecewiseAffineConvexFn | None = None) -> str:
    doc = body_to_dict(body)
    if fn is not None:
        doc["fn"] = fn_to_dict(fn)
    return json.dumps(doc)


def load_fixture(
    path: Path | str,
) -> tuple[ConvexBody, PiecewiseAffineConvexFn | None]:
    data = loads_document(Path(path).read_text())
    body = body_from_dict(data)
    fn = fn_from_dict(data["fn"], body) if "fn" in data else None
    return body, fn
