import argparse
import sys

from cvxmetric import __version__
from cvxmetric.cli.commands import (
    run_bounds,
    run_certify,
    run_extremal,
    run_fixture,
    run_funk,
    run_gauge,
    run_hilbert,
    run_lipschitz,
    run_matrix,
    run_selftest,
    run_subdiff,
    run_tau,
    run_thompson,
)
from cvxmetric.metrics import Metric
from cvxmetric.oracles import BODY_KINDS, BUILTIN_FNS


class _Parser(argparse.ArgumentParser):
    """Usage errors exit 1; exit 2 means a refuted claim."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_body(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--body", required=True, help="Body JSON file")


def _add_pair(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--x", required=True, help="Point as comma-separated reals")
    parser.add_argument("--y", required=True, help="Point as comma-separated reals")


def _add_range(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--m", type=float, default=0.0, help="Lower bound of f")
    parser.add_argument("--M", type=float, default=1.0, help="Upper bound of f")


def _add_output(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", help="Write the document to this path")


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=["json", "csv"], help="Output format (overrides config)"
    )


def _add_tol(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--tol", type=float, help="Tolerance (overrides config)")


def _add_seed(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--seed", type=int, help="Random seed (overrides CVXMETRIC_SEED and config)"
    )


def _add_function_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--fn",
        choices=BUILTIN_FNS,
        help="Built-in test function (default: the 'fn' entry of the body file)",
    )
    parser.add_argument("--points", help="CSV of points; all pairs are checked")
    parser.add_argument(
        "--pairs", type=int, help="Number of seeded random pairs (default: 100)"
    )


def main():
    parser = _Parser(prog="cvxmetric")
    parser.add_argument("--version", action="store_true", help="Show version and exit")
    parser.add_argument("--config", help="Path to config file")
    parser.add_argument("--json", action="store_true", help="Wrap output in envelope")
    parser.add_argument(
        "--log-level",
        default="warn",
        choices=["debug", "info", "warn", "error"],
        help="Logging level",
    )

    subparsers = parser.add_subparsers(dest="command")

    tau_parser = subparsers.add_parser("tau", help="Ray-exit parameter tau(x, y)")
    _add_body(tau_parser)
    _add_pair(tau_parser)
    _add_output(tau_parser)

    for metric in Metric:
        metric_parser = subparsers.add_parser(
            metric.value, help=f"{metric.value.capitalize()} distance from x to y"
        )
        _add_body(metric_parser)
        _add_pair(metric_parser)
        _add_output(metric_parser)

    matrix_parser = subparsers.add_parser("matrix", help="Pairwise distance matrix")
    _add_body(matrix_parser)
    matrix_parser.add_argument("--points", required=True, help="CSV of points")
    matrix_parser.add_argument(
        "--metric",
        choices=[m.value for m in Metric],
        default=Metric.FUNK.value,
        help="Metric (default: funk)",
    )
    _add_format(matrix_parser)
    _add_output(matrix_parser)

    bounds_parser = subparsers.add_parser(
        "bounds", help="Variation bounds on f(y) - f(x)"
    )
    _add_body(bounds_parser)
    _add_pair(bounds_parser)
    _add_range(bounds_parser)
    _add_output(bounds_parser)

    certify_parser = subparsers.add_parser(
        "certify", help="Check a convex function against the variation bounds"
    )
    _add_body(certify_parser)
    _add_function_source(certify_parser)
    _add_seed(certify_parser)
    _add_tol(certify_parser)
    _add_format(certify_parser)
    _add_output(certify_parser)

    lipschitz_parser = subparsers.add_parser(
        "lipschitz", help="Lipschitz certificates in the Thompson and Hilbert metrics"
    )
    _add_body(lipschitz_parser)
    _add_function_source(lipschitz_parser)
    _add_seed(lipschitz_parser)
    _add_tol(lipschitz_parser)
    _add_output(lipschitz_parser)

    extremal_parser = subparsers.add_parser(
        "extremal", help="Extremal function attaining the bound at (x, y)"
    )
    _add_body(extremal_parser)
    _add_pair(extremal_parser)
    _add_range(extremal_parser)
    extremal_parser.add_argument(
        "--orientation",
        choices=["upper", "lower"],
        default="upper",
        help="Attain the upper or the lower bound (default: upper)",
    )
    extremal_parser.add_argument(
        "--grid", type=int, help="Emit a CSV grid with N points per axis"
    )
    _add_tol(extremal_parser)
    _add_output(extremal_parser)

    gauge_parser = subparsers.add_parser(
        "gauge", help="Minkowski gauge centered at x, evaluated at y"
    )
    _add_body(gauge_parser)
    _add_pair(gauge_parser)
    _add_output(gauge_parser)

    subdiff_parser = subparsers.add_parser(
        "subdiff", help="Membership in the maximal subdifferential at x"
    )
    _add_body(subdiff_parser)
    subdiff_parser.add_argument("--x", required=True, help="Center point")
    subdiff_parser.add_argument("--zeta", required=True, help="Candidate subgradient")
    _add_range(subdiff_parser)
    _add_tol(subdiff_parser)
    _add_output(subdiff_parser)

    fixture_parser = subparsers.add_parser(
        "fixture", help="Generate a random body with a convex function"
    )
    fixture_parser.add_argument("--dim", type=int, required=True, help="Dimension")
    fixture_parser.add_argument(
        "--kind", choices=BODY_KINDS, default="vpolytope", help="Representation"
    )
    fixture_parser.add_argument(
        "--pieces", type=int, default=3, help="Number of affine pieces"
    )
    _add_range(fixture_parser)
    _add_seed(fixture_parser)
    _add_output(fixture_parser)

    selftest_parser = subparsers.add_parser(
        "selftest", help="Run the property and oracle-agreement suite"
    )
    _add_seed(selftest_parser)
    _add_output(selftest_parser)

    args = parser.parse_args()

    if args.version:
        print(f"cvxmetric {__version__}")
        return 0

    commands = {
        "tau": run_tau,
        "funk": run_funk,
        "thompson": run_thompson,
        "hilbert": run_hilbert,
        "matrix": run_matrix,
        "bounds": run_bounds,
        "certify": run_certify,
        "lipschitz": run_lipschitz,
        "extremal": run_extremal,
        "gauge": run_gauge,
        "subdiff": run_subdiff,
        "fixture": run_fixture,
        "selftest": run_selftest,
    }
    if args.command in commands:
        return commands[args.command](args)

    parser.print_help()
    return 0


if __name__ == "__main__":
    sys.exit(main())
