from pathlib import Path

import pytest

import cvxmetric.config
from cvxmetric.config import SEED_ENV_VAR, Config, load_config


def test_empty_config():
    config = Config({})
    assert config.tol_interior == 1e-9
    assert config.tol_certify == 1e-9
    assert config.tol_subdiff == 1e-9
    assert config.tol_near_boundary == 1e-12
    assert config.tau_saturation == 1e12
    assert config.tol_bisection == 1e-10
    assert config.sampling_seed == 0
    assert config.sampling_shrink == 0.95
    assert config.sampling_max_rejections == 10000
    assert config.selftest_instances == 500
    assert config.selftest_certify_instances == 1000
    assert config.selftest_max_dim == 8
    assert config.output_format == "json"


def test_config_parsing(tmp_path):
    toml_content = """
[tolerances]
interior = 1e-8
certify = 1e-7
subdiff = 1e-6
near_boundary = 1e-10
tau_saturation = 1e9
bisection = 1e-12

[sampling]
seed = 42
shrink = 0.5
max_rejections = 100

[selftest]
instances = 20
certify_instances = 30
max_dim = 3

[output]
format = "csv"
    """
    config_file = tmp_path / "test_config.toml"
    config_file.write_text(toml_content)

    config = load_config(config_file)
    assert config.tol_interior == 1e-8
    assert config.tol_certify == 1e-7
    assert config.tol_subdiff == 1e-6
    assert config.tol_near_boundary == 1e-10
    assert config.tau_saturation == 1e9
    assert config.tol_bisection == 1e-12

    assert config.sampling_seed == 42
    assert config.sampling_shrink == 0.5
    assert config.sampling_max_rejections == 100

    assert config.selftest_instances == 20
    assert config.selftest_certify_instances == 30
    assert config.selftest_max_dim == 3
    assert config.output_format == "csv"


def test_integer_tolerance_is_float():
    config = Config({"tolerances": {"certify": 0}})
    assert config.tol_certify == 0.0
    assert isinstance(config.tol_certify, float)


def test_load_config_missing_default_returns_empty(tmp_path, monkeypatch):
    monkeypatch.setattr(
        cvxmetric.config, "DEFAULT_CONFIG_PATH", tmp_path / "does_not_exist.toml"
    )
    config = load_config()
    assert config.tol_interior == 1e-9


def test_load_config_explicit_missing_raises_error(tmp_path):
    missing_file = tmp_path / "missing.toml"
    with pytest.raises(FileNotFoundError, match="No config file at"):
        load_config(missing_file)


def test_load_config_default_path_exists(tmp_path, monkeypatch):
    config_file = tmp_path / "config.toml"
    config_file.write_text("[sampling]\nseed = 7\n")

    monkeypatch.setattr(cvxmetric.config, "DEFAULT_CONFIG_PATH", config_file)
    config = load_config()
    assert config.sampling_seed == 7


def test_default_seed_prefers_env(monkeypatch):
    config = Config({"sampling": {"seed": 3}})
    monkeypatch.delenv(SEED_ENV_VAR, raising=False)
    assert config.default_seed() == 3

    monkeypatch.setenv(SEED_ENV_VAR, "11")
    assert config.default_seed() == 11


def test_packaged_example_config_matches_defaults():
    path = Path(cvxmetric.config.__file__).parent / "config.toml"
    config = load_config(path)
    defaults = Config({})
    assert config.tol_interior == defaults.tol_interior
    assert config.tau_saturation == defaults.tau_saturation
    assert config.sampling_shrink == defaults.sampling_shrink
    assert config.selftest_max_dim == defaults.selftest_max_dim
