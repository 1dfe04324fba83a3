import os
import sys

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib
from pathlib import Path

DEFAULT_CONFIG_PATH = Path.home() / ".config" / "cvxmetric" / "config.toml"
SEED_ENV_VAR = "CVXMETRIC_SEED"


class Config:
    def __init__(self, data: dict):
        self._data = data

    def _section(self, name: str) -> dict:
        return self._data.get(name, {})

    @property
    def tol_interior(self) -> float:
        return float(self._section("tolerances").get("interior", 1e-9))

    @property
    def tol_certify(self) -> float:
        return float(self._section("tolerances").get("certify", 1e-9))

    @property
    def tol_subdiff(self) -> float:
        return float(self._section("tolerances").get("subdiff", 1e-9))

    @property
    def tol_near_boundary(self) -> float:
        return float(self._section("tolerances").get("near_boundary", 1e-12))

    @property
    def tau_saturation(self) -> float:
        return float(self._section("tolerances").get("tau_saturation", 1e12))

    @property
    def tol_bisection(self) -> float:
        return float(self._section("tolerances").get("bisection", 1e-10))

    @property
    def sampling_seed(self) -> int:
        return int(self._section("sampling").get("seed", 0))

    @property
    def sampling_shrink(self) -> float:
        return float(self._section("sampling").get("shrink", 0.95))

    @property
    def sampling_max_rejections(self) -> int:
        return int(self._section("sampling").get("max_rejections", 10000))

    @property
    def selftest_instances(self) -> int:
        return int(self._section("selftest").get("instances", 500))

    @property
    def selftest_certify_instances(self) -> int:
        return int(self._section("selftest").get("certify_instances", 1000))

    @property
    def selftest_max_dim(self) -> int:
        return int(self._section("selftest").get("max_dim", 8))

    @property
    def output_format(self) -> str:
        return self._section("output").get("format", "json")

    def default_seed(self) -> int:
        """Seed used when no --seed flag is given; the env var wins over config."""
        env = os.environ.get(SEED_ENV_VAR)
        if env:
            return int(env)
        return self.sampling_seed


def load_config(path: Path | None = None) -> Config:
    """Read a TOML config; an absent ~/.config/cvxmetric/config.toml means
    built-in tolerances, an absent explicit path is an error."""
    source = path or DEFAULT_CONFIG_PATH
    if source.exists():
        return Config(tomllib.loads(source.read_text(encoding="utf-8")))
    if path is not None:
        raise FileNotFoundError(f"No config file at {source}")
    return Config({})
