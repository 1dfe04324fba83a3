import pytest

from cvxmetric.geometry import Ball, HPolytope, VPolytope


def pytest_addoption(parser):
    parser.addoption(
        "--acceptance",
        action="store_true",
        default=False,
        help="run full-size tests marked as acceptance",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--acceptance"):
        return

    for item in items:
        if "acceptance" in item.keywords:
            item.add_marker(pytest.mark.skip(reason="full-size run; pass --acceptance"))


@pytest.fixture
def interval():
    """{0 <= z <= 1}."""
    return HPolytope([[1.0], [-1.0]], [1.0, 0.0])


@pytest.fixture
def half_line():
    """{z >= 0}."""
    return HPolytope([[-1.0]], [0.0])


@pytest.fixture
def unit_ball():
    return Ball([0.0, 0.0], 1.0)


@pytest.fixture
def square_v():
    return VPolytope([[1.0, 1.0], [1.0, -1.0], [-1.0, 1.0], [-1.0, -1.0]])


@pytest.fixture
def square_h():
    return HPolytope(
        [[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0], [0.0, -1.0]], [1.0, 1.0, 1.0, 1.0]
    )
