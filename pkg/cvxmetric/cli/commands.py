import datetime
import itertools
import json
import logging
import sys
from pathlib import Path

import numpy as np

from cvxmetric.bounds import (
    BoundedConvexFn,
    certify,
    lipschitz_certificates,
    metric_form_bounds,
    variation_bounds,
)
from cvxmetric.config import Config, load_config
from cvxmetric.errors import (
    BodyFormatError,
    CvxMetricError,
    DimensionError,
    NotInteriorError,
    RangeViolation,
)
from cvxmetric.extremal import Orientation, build_extremal, eval_extremal
from cvxmetric.gauge import GaugeFn, gauge_value, max_subdiff_membership
from cvxmetric.geometry import (
    ConvexBody,
    Vector,
    is_interior,
    load_body,
    load_points,
    tau,
)
from cvxmetric.geometry.io import parse_point
from cvxmetric.metrics import METRICS, Metric, distance_matrix
from cvxmetric.oracles import (
    builtin_fn,
    dump_fixture,
    load_fixture,
    random_body,
    random_convex_fn,
    random_pairs,
)
from cvxmetric.util import dumps, format_csv_rows, format_matrix, to_jsonable

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_REFUTED = 2

DEFAULT_PAIRS = 100


def _json_envelope(command: str, ok: bool, data=None, error=None) -> dict:
    return {
        "ok": ok,
        "command": command,
        "timestamp_utc": datetime.datetime.now(datetime.timezone.utc).isoformat(),
        "data": data,
        "error": error,
    }


def _init_logging(level: str | None) -> None:
    if not level:
        return
    level_map = {
        "debug": logging.DEBUG,
        "info": logging.INFO,
        "warn": logging.WARNING,
        "error": logging.ERROR,
    }
    logging.basicConfig(level=level_map.get(level, logging.INFO), stream=sys.stderr)


def _config_path_from_args(args) -> Path | None:
    if args is None:
        return None
    path = getattr(args, "config", None)
    return Path(path) if path else None


def _error_code(exc: Exception) -> str:
    if isinstance(exc, BodyFormatError):
        return "body_format"
    if isinstance(exc, NotInteriorError):
        return "not_interior"
    if isinstance(exc, DimensionError):
        return "dimension"
    if isinstance(exc, FileNotFoundError):
        return "file_not_found"
    return "invalid_input"


def _write(args, text: str) -> None:
    out = getattr(args, "out", None)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _report(
    args,
    command: str,
    data=None,
    ok: bool = True,
    csv_text: str | None = None,
    message: str = "certification failed",
) -> None:
    """Emit the command's document: plain JSON or CSV, or the envelope
    under --json."""
    if getattr(args, "json", False):
        payload = _json_envelope(
            command=command,
            ok=ok,
            data=data if csv_text is None else {"csv": csv_text},
            error=None
            if ok
            else {"code": "certification_failed", "message": message, "details": None},
        )
        _write(args, json.dumps(to_jsonable(payload), indent=2))
    elif csv_text is not None:
        _write(args, csv_text)
    else:
        _write(args, dumps(data))


def _fail(args, command: str, exc: Exception) -> int:
    if getattr(args, "json", False):
        payload = _json_envelope(
            command=command,
            ok=False,
            data=None,
            error={"code": _error_code(exc), "message": str(exc), "details": None},
        )
        print(json.dumps(payload, indent=2))
    else:
        print(f"{command}: {exc}", file=sys.stderr)
    return EXIT_INPUT


def _run(command: str, args, action) -> int:
    _init_logging(getattr(args, "log_level", None))
    try:
        config = load_config(_config_path_from_args(args))
        return action(config)
    except (CvxMetricError, ValueError, OSError) as e:
        logger.debug("%s failed", command, exc_info=True)
        return _fail(args, command, e)


def _seed(args, config: Config) -> int:
    seed = getattr(args, "seed", None)
    return config.default_seed() if seed is None else int(seed)


def _tol(args, default: float) -> float:
    tol = getattr(args, "tol", None)
    return default if tol is None else float(tol)


def _point(args, name: str, body: ConvexBody) -> Vector:
    text = getattr(args, name, None)
    if text is None:
        raise ValueError(f"--{name} is required")
    return parse_point(text, body.dim)


def _range(args) -> tuple[float, float]:
    m = getattr(args, "m", None)
    M = getattr(args, "M", None)
    return (0.0 if m is None else float(m)), (1.0 if M is None else float(M))


def _output_format(args, config: Config) -> str:
    fmt = getattr(args, "format", None) or config.output_format
    if fmt not in ("json", "csv"):
        raise ValueError(f"Unknown format {fmt!r}; expected json or csv")
    return fmt


def _pairs(args, body: ConvexBody, config: Config) -> list[tuple[Vector, Vector]]:
    """All i < j pairs of --points, else --pairs seeded interior pairs."""
    points_path = getattr(args, "points", None)
    if points_path:
        pts = load_points(points_path, body.dim)
        return list(itertools.combinations(pts, 2))
    count = getattr(args, "pairs", None) or DEFAULT_PAIRS
    return random_pairs(
        body,
        count,
        _seed(args, config),
        config.sampling_shrink,
        config.sampling_max_rejections,
    )


def _load_fn(args) -> tuple[ConvexBody, BoundedConvexFn]:
    body, fixture_fn = load_fixture(args.body)
    name = getattr(args, "fn", None)
    if name:
        return body, builtin_fn(name, body)
    if fixture_fn is None:
        raise ValueError(
            "No function to certify: pass --fn NAME or add an 'fn' entry "
            "to the body file"
        )
    return body, fixture_fn


def grid_extremal(body: ConvexBody, fn: BoundedConvexFn, n: int) -> list[list[float]]:
    """Rows (coordinates..., f) on an n-per-axis grid of cell midpoints over
    the bounding box, interior points only."""
    if body.dim > 2:
        raise DimensionError("gridding limited to dim ≤ 2")
    if n < 1:
        raise ValueError(f"--grid must be at least 1, got {n}")
    lo, hi = body.bounding_box
    if not (np.all(np.isfinite(lo)) and np.all(np.isfinite(hi))):
        raise ValueError("gridding needs a bounded body")
    axes = [lo[i] + (np.arange(n) + 0.5) * (hi[i] - lo[i]) / n for i in range(body.dim)]
    rows = []
    for coords in itertools.product(*axes):
        z = np.array(coords)
        if is_interior(body, z):
            rows.append([*coords, fn(z)])
    return rows


def run_tau(args) -> int:
    def action(config: Config) -> int:
        body = load_body(args.body)
        x = _point(args, "x", body)
        y = _point(args, "y", body)
        t = tau(
            body,
            x,
            y,
            tol_int=config.tol_interior,
            near_boundary=config.tol_near_boundary,
        )
        _report(args, "tau", {"tau": t})
        return EXIT_OK

    return _run("tau", args, action)


def _run_metric(args, metric: Metric) -> int:
    def action(config: Config) -> int:
        body = load_body(args.body)
        x = _point(args, "x", body)
        y = _point(args, "y", body)
        value = METRICS[metric](body, x, y, config.tol_interior, config.tau_saturation)
        data: dict = {metric.value: value.value}
        if value.saturated:
            data["saturated"] = True
        _report(args, metric.value, data)
        return EXIT_OK

    return _run(metric.value, args, action)


def run_funk(args) -> int:
    return _run_metric(args, Metric.FUNK)


def run_thompson(args) -> int:
    return _run_metric(args, Metric.THOMPSON)


def run_hilbert(args) -> int:
    return _run_metric(args, Metric.HILBERT)


def run_matrix(args) -> int:
    def action(config: Config) -> int:
        body = load_body(args.body)
        if not getattr(args, "points", None):
            raise ValueError("--points is required")
        points = load_points(args.points, body.dim)
        metric = Metric(getattr(args, "metric", None) or Metric.FUNK.value)
        matrix = distance_matrix(
            body, points, metric, config.tol_interior, config.tau_saturation
        )
        if _output_format(args, config) == "csv":
            _report(args, "matrix", csv_text=format_matrix(matrix, "csv"))
        else:
            _report(args, "matrix", {"metric": metric.value, "matrix": matrix})
        return EXIT_OK

    return _run("matrix", args, action)


def run_bounds(args) -> int:
    def action(config: Config) -> int:
        body = load_body(args.body)
        x = _point(args, "x", body)
        y = _point(args, "y", body)
        m, M = _range(args)
        interval = variation_bounds(body, x, y, m, M, tol_int=config.tol_interior)
        forms = metric_form_bounds(
            body, x, y, m, M, config.tol_interior, config.tau_saturation
        )
        data = {
            "lower": interval.lower,
            "upper": interval.upper,
            "funk_form": [forms.funk_form.lower, forms.funk_form.upper],
            "thompson_bound": forms.thompson_bound,
            "hilbert_bound": forms.hilbert_bound,
        }
        _report(args, "bounds", data)
        return EXIT_OK

    return _run("bounds", args, action)


def run_certify(args) -> int:
    def action(config: Config) -> int:
        body, fn = _load_fn(args)
        pairs = _pairs(args, body, config)
        tol = _tol(args, config.tol_certify)
        try:
            reports = certify(body, fn, pairs, tol, config.tol_interior)
        except RangeViolation as e:
            data = {
                "passed": False,
                "range_violation": {"point": e.point, "value": e.value},
            }
            _report(args, "certify", data, ok=False, message=str(e))
            return EXIT_REFUTED

        failures = sum(1 for r in reports if not r.passed)
        ok = failures == 0
        if _output_format(args, config) == "csv":
            rows = [
                [
                    r.observed,
                    r.interval.lower,
                    r.interval.upper,
                    r.slack_lower,
                    r.slack_upper,
                    float(r.passed),
                ]
                for r in reports
            ]
            _report(args, "certify", ok=ok, csv_text=format_csv_rows(rows))
        elif getattr(args, "json", False):
            data = {
                "passed": ok,
                "pairs": len(reports),
                "failures": failures,
                "reports": [r.to_record() for r in reports],
            }
            _report(args, "certify", data, ok=ok)
        else:
            _write(args, "\n".join(dumps(r.to_record()) for r in reports))
        return EXIT_OK if ok else EXIT_REFUTED

    return _run("certify", args, action)


def run_lipschitz(args) -> int:
    def action(config: Config) -> int:
        body, fn = _load_fn(args)
        pairs = _pairs(args, body, config)
        certificates = lipschitz_certificates(
            body,
            fn,
            pairs,
            tol_cert=_tol(args, config.tol_certify),
            tol_int=config.tol_interior,
            saturation=config.tau_saturation,
        )
        ok = all(c.passed for c in certificates)
        if getattr(args, "json", False):
            records = [c.to_record() for c in certificates]
            _report(args, "lipschitz", {"certificates": records}, ok=ok)
        else:
            _write(args, "\n".join(dumps(c.to_record()) for c in certificates))
        return EXIT_OK if ok else EXIT_REFUTED

    return _run("lipschitz", args, action)


def run_extremal(args) -> int:
    def action(config: Config) -> int:
        body = load_body(args.body)
        x = _point(args, "x", body)
        y = _point(args, "y", body)
        m, M = _range(args)
        orientation = Orientation(getattr(args, "orientation", None) or "upper")
        fn = build_extremal(body, x, y, m, M, orientation, config.tol_interior)

        grid = getattr(args, "grid", None)
        if grid is not None:
            rows = grid_extremal(body, fn, int(grid))
            _report(args, "extremal", csv_text=format_csv_rows(rows))
            return EXIT_OK

        sign = 1.0 if orientation is Orientation.UPPER else -1.0
        target = sign * (M - m) * fn.tau.reciprocal() + 0.0
        f_x = eval_extremal(fn, x, config.tol_interior)
        f_y = eval_extremal(fn, y, config.tol_interior)
        attained = abs((f_y - f_x) - target) <= _tol(args, config.tol_certify)
        data = {
            "orientation": orientation.value,
            "tau": fn.tau,
            "f_x": f_x,
            "f_y": f_y,
            "difference": f_y - f_x,
            "target": target,
            "attained": attained,
        }
        _report(args, "extremal", data, ok=attained, message="bound not attained")
        return EXIT_OK if attained else EXIT_REFUTED

    return _run("extremal", args, action)


def run_gauge(args) -> int:
    def action(config: Config) -> int:
        body = load_body(args.body)
        center = _point(args, "x", body)
        if not is_interior(body, center, config.tol_interior * body.scale):
            raise NotInteriorError(f"center {center.tolist()} is not strictly interior")
        value = gauge_value(
            GaugeFn(body, center),
            _point(args, "y", body),
            tol_int=config.tol_interior,
            near_boundary=config.tol_near_boundary,
        )
        _report(args, "gauge", {"gauge": value})
        return EXIT_OK

    return _run("gauge", args, action)


def run_subdiff(args) -> int:
    def action(config: Config) -> int:
        body = load_body(args.body)
        center = _point(args, "x", body)
        zeta = _point(args, "zeta", body)
        m, M = _range(args)
        membership = max_subdiff_membership(
            body,
            center,
            zeta,
            m,
            M,
            tol_sub=_tol(args, config.tol_subdiff),
            tol_int=config.tol_interior,
        )
        _report(
            args,
            "subdiff",
            {"member": membership.member, "support_value": membership.support_value},
        )
        return EXIT_OK

    return _run("subdiff", args, action)


def run_fixture(args) -> int:
    def action(config: Config) -> int:
        seed = _seed(args, config)
        body = random_body(int(args.dim), args.kind, seed)
        m, M = _range(args)
        fn = random_convex_fn(body, m, M, int(getattr(args, "pieces", 3) or 3), seed)
        _write(args, dump_fixture(body, fn))
        return EXIT_OK

    return _run("fixture", args, action)


def run_selftest(args) -> int:
    # Deferred: selftest pulls in every module.
    from .selftest import run_checks

    def action(config: Config) -> int:
        checks = run_checks(config, _seed(args, config))
        ok = all(c["ok"] for c in checks.values())

        if getattr(args, "json", False):
            payload = _json_envelope(
                command="selftest",
                ok=ok,
                data={"checks": checks},
                error=None
                if ok
                else {
                    "code": "selftest_failed",
                    "message": "one or more checks failed",
                    "details": None,
                },
            )
            _write(args, json.dumps(payload, indent=2))
        else:
            lines = ["cvxmetric Selftest Report", "========================="]
            for name, result in checks.items():
                status = "OK" if result["ok"] else "FAIL"
                lines.append(f"{name:26} : {status} ({result['detail']})")
            lines.append("")
            lines.append("All checks passed." if ok else "Some checks failed.")
            _write(args, "\n".join(lines))
        return EXIT_OK if ok else EXIT_REFUTED

    return _run("selftest", args, action)
