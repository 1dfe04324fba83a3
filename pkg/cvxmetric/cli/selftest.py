"""Property and oracle-agreement suite behind ``cvxmetric selftest``.

Each check returns ``{"ok": bool, "detail": str}``. Bodies come from a small
seeded pool per (kind, dim); functions, ranges and pairs vary per instance.
"""

import logging
import math
from collections.abc import Callable, Iterator

import numpy as np

from cvxmetric.bounds import certify, metric_form_bounds, variation_bounds
from cvxmetric.config import Config
from cvxmetric.errors import ClampedPointError
from cvxmetric.extremal import attainment_check
from cvxmetric.gauge import (
    GaugeFn,
    gauge_value,
    hrep_contains,
    max_subdiff_contains,
    max_subdiff_hrep,
    max_subdiff_support,
    subgradient_of_max_affine,
)
from cvxmetric.geometry import (
    Ball,
    ConvexBody,
    HPolytope,
    Vector,
    VPolytope,
    tau,
)
from cvxmetric.metrics import funk, funk_ratio, hilbert, thompson
from cvxmetric.oracles import (
    BODY_KINDS,
    builtin_fn,
    hilbert_cross_ratio_oracle,
    random_body,
    random_convex_fn,
    random_pairs,
    rng_stream,
    tau_bisection_oracle,
)

logger = logging.getLogger(__name__)

POOL_SEEDS = 2
BALL_CHECK_PAIRS = 200
FALSIFIER_PAIRS = 500
MAX_DRAW_FACTOR = 4


class _Instances:
    """Seeded (body, pair) instances cycling through kinds and dimensions."""

    def __init__(self, seed: int, max_dim: int, bisection_tol: float = 1e-10):
        self.seed = seed
        self.max_dim = max_dim
        self.bisection_tol = bisection_tol
        self._pool: dict[tuple[str, int, int], ConvexBody] = {}

    def body(self, i: int, kinds: tuple[str, ...] = BODY_KINDS) -> ConvexBody:
        kind = kinds[i % len(kinds)]
        dim = 1 + (i // len(kinds)) % self.max_dim
        slot = (i // (len(kinds) * self.max_dim)) % POOL_SEEDS
        key = (kind, dim, slot)
        if key not in self._pool:
            self._pool[key] = random_body(dim, kind, self.seed + slot)
        return self._pool[key]

    def pairs(self, body: ConvexBody, i: int, count: int = 1):
        return random_pairs(body, count, self.seed * 1_000_003 + i)

    def iterate(
        self, count: int, kinds: tuple[str, ...] = BODY_KINDS
    ) -> Iterator[tuple[int, ConvexBody, Vector, Vector]]:
        for i in range(count):
            body = self.body(i, kinds)
            (x, y), *_ = self.pairs(body, i)
            yield i, body, x, y


def _random_range(i: int, seed: int) -> tuple[float, float]:
    rng = rng_stream(seed, "range", i)
    m = float(rng.uniform(-1.0, 1.0))
    return m, m + float(rng.uniform(0.1, 2.0))


def _result(failures: int, total: int, what: str, required: int = 0) -> dict:
    if total < required:
        return {"ok": False, "detail": f"only {total} of {required} {what} drawn"}
    if failures:
        return {"ok": False, "detail": f"{failures} of {total} {what} failed"}
    return {"ok": True, "detail": f"{total} {what}"}


def check_variation_bounds(inst: _Instances, count: int) -> dict:
    failures = 0
    for i in range(count):
        body = inst.body(i)
        m, M = _random_range(i, inst.seed)
        fn = random_convex_fn(body, m, M, 1 + i % 5, inst.seed + i)
        reports = certify(body, fn, inst.pairs(body, i))
        failures += sum(1 for r in reports if not r.passed)
    return _result(failures, count, "certified instances")


def check_attainment(inst: _Instances, count: int) -> dict:
    # Every tenth instance lies on the half-line, where tau(x, y) is +inf.
    half_line = HPolytope([[-1.0]], [0.0])
    failures = 0
    for i, body, x, y in inst.iterate(count):
        m, M = _random_range(i, inst.seed)
        if i % 10 == 9:
            body, x, y = half_line, np.array([1.0 + i]), np.array([2.0 + i])
        result = attainment_check(body, x, y, m, M)
        if not (result.upper_attained and result.lower_attained):
            failures += 1
    return _result(failures, count, "extremal pairs")


def check_funk_identity(inst: _Instances, count: int) -> dict:
    failures = 0
    checked = 0
    for _, body, x, y in inst.iterate(MAX_DRAW_FACTOR * count):
        if checked == count:
            break
        t = tau(body, x, y)
        if t.is_inf:
            continue
        checked += 1
        F = funk(body, x, y).value
        identity = abs(-math.expm1(-F) - t.reciprocal())
        ratio = abs(F - funk_ratio(body, x, y).value)
        if identity > 1e-12 or ratio > 1e-9:
            failures += 1
    return _result(failures, checked, "finite-tau pairs", count)


def check_ball_cross_ratio(inst: _Instances, count: int) -> dict:
    ball = Ball([0.0, 0.0], 1.0)
    failures = 0
    for x, y in random_pairs(ball, count, inst.seed):
        expected = hilbert_cross_ratio_oracle(ball, x, y)
        if abs(hilbert(ball, x, y).value - expected) > 1e-9:
            failures += 1
    anchor = hilbert(ball, [0.0, 0.0], [0.5, 0.0]).value
    if abs(anchor - 0.5 * math.log(3.0)) > 1e-12:
        return {"ok": False, "detail": f"hilbert((0,0), (0.5,0)) = {anchor!r}"}
    return _result(failures, count, "unit-ball pairs")


def check_domination_chain(inst: _Instances, count: int) -> dict:
    failures = 0
    for i, body, x, y in inst.iterate(count):
        m, M = _random_range(i, inst.seed)
        span = M - m
        upper = variation_bounds(body, x, y, m, M).upper
        forms = metric_form_bounds(body, x, y, m, M)
        T = thompson(body, x, y).value
        H = hilbert(body, x, y).value
        chain = (
            upper <= forms.thompson_bound + 1e-12
            and forms.thompson_bound <= span * T + 1e-12
            and forms.hilbert_bound <= 2.0 * span * H + 1e-12
        )
        if not chain:
            failures += 1
    return _result(failures, count, "bound chains")


def check_gauge_identity(inst: _Instances, count: int) -> dict:
    failures = 0
    checked = 0
    for _, body, x0, x in inst.iterate(MAX_DRAW_FACTOR * count):
        if checked == count:
            break
        t = tau(body, x0, x)
        if t.is_inf:
            continue
        checked += 1
        if abs(gauge_value(GaugeFn(body, x0), x) * t.finite_value() - 1.0) > 1e-9:
            failures += 1
    return _result(failures, checked, "gauge values", count)


def check_subdiff_inclusion(inst: _Instances, count: int) -> dict:
    failures = 0
    checked = 0
    for i, body, x0, _ in inst.iterate(MAX_DRAW_FACTOR * count):
        if checked == count:
            break
        m, M = _random_range(i, inst.seed)
        fn = random_convex_fn(body, m, M, 1 + i % 5, inst.seed + i)
        try:
            zeta = subgradient_of_max_affine(fn, x0)
        except ClampedPointError:
            # 0 is the subgradient there and always included.
            continue
        checked += 1
        if not max_subdiff_contains(body, x0, zeta, m, M):
            failures += 1
    return _result(failures, checked, "sampled subgradients", count)


def check_polar_hrep(inst: _Instances, count: int) -> dict:
    square = VPolytope([[1.0, 1.0], [1.0, -1.0], [-1.0, 1.0], [-1.0, -1.0]])
    x0 = np.zeros(2)
    hrep = max_subdiff_hrep(square, x0, 0.0, 1.0)
    rng = rng_stream(inst.seed, "polar")
    failures = 0
    for zeta in rng.uniform(-1.5, 1.5, (count, 2)):
        support = max_subdiff_support(square, x0, zeta, 0.0, 1.0).finite_value()
        if abs(support - float(np.max(hrep.A @ zeta))) > 1e-12 or hrep_contains(
            hrep, zeta, 0.0, 1.0
        ) != max_subdiff_contains(square, x0, zeta, 0.0, 1.0):
            failures += 1
    return _result(failures, count, "polar queries")


def check_tau_oracle(inst: _Instances, count: int) -> dict:
    failures = 0
    for kind in BODY_KINDS:
        for _, body, x, y in inst.iterate(count, kinds=(kind,)):
            closed = tau(body, x, y)
            oracle = tau_bisection_oracle(body, x, y, tol=inst.bisection_tol)
            if closed.is_inf or oracle.is_inf:
                if closed.is_inf != oracle.is_inf:
                    failures += 1
                continue
            c, o = closed.finite_value(), oracle.finite_value()
            if abs(c - o) > 1e-6 * c:
                failures += 1
    return _result(failures, count * len(BODY_KINDS), "tau comparisons")


def check_metric_axioms(inst: _Instances, count: int) -> dict:
    failures = 0
    for kind in BODY_KINDS:
        for i in range(count):
            body = inst.body(i, (kind,))
            first, second = inst.pairs(body, i, 2)
            if not _weak_metric_holds(body, first, second):
                failures += 1
    return _result(failures, count * len(BODY_KINDS), "triples")


def _weak_metric_holds(body: ConvexBody, first, second) -> bool:
    (x, y), (z, _) = first, second
    ok = (
        funk(body, x, z).value <= funk(body, x, y).value + funk(body, y, z).value + 1e-9
    )
    ok = ok and funk(body, x, x).value == 0.0
    T, H = thompson(body, x, y).value, hilbert(body, x, y).value
    ok = ok and T == thompson(body, y, x).value and H == hilbert(body, y, x).value
    ok = ok and H <= T + 1e-12 and T <= 2.0 * H + 1e-12
    return ok


def check_falsifier(inst: _Instances, count: int) -> dict:
    interval = HPolytope([[1.0], [-1.0]], [1.0, 0.0])
    sin_fn = builtin_fn("sin", interval)
    reports = certify(interval, sin_fn, random_pairs(interval, count, inst.seed))
    failures = sum(1 for r in reports if not r.passed)
    if failures == 0:
        return {"ok": False, "detail": f"no violation in {count} pairs"}
    return {"ok": True, "detail": f"{failures} of {count} pairs refuted"}


def run_checks(config: Config, seed: int) -> dict[str, dict]:
    inst = _Instances(seed, config.selftest_max_dim, config.tol_bisection)
    n = config.selftest_instances
    suites: dict[str, tuple[Callable[[_Instances, int], dict], int]] = {
        "variation bounds": (check_variation_bounds, config.selftest_certify_instances),
        "extremal attainment": (check_attainment, n),
        "funk identity": (check_funk_identity, n),
        "ball cross-ratio": (check_ball_cross_ratio, min(n, BALL_CHECK_PAIRS)),
        "domination chain": (check_domination_chain, n),
        "gauge identity": (check_gauge_identity, n),
        "subdiff inclusion": (check_subdiff_inclusion, n),
        "polar H-rep": (check_polar_hrep, n),
        "tau oracle": (check_tau_oracle, n),
        "metric axioms": (check_metric_axioms, n),
        "falsifier": (check_falsifier, FALSIFIER_PAIRS),
    }
    checks = {}
    for name, (check, count) in suites.items():
        try:
            checks[name] = check(inst, count)
        except Exception as e:
            logger.debug("selftest check %s raised", name, exc_info=True)
            checks[name] = {"ok": False, "detail": f"error: {e}"}
    return checks
