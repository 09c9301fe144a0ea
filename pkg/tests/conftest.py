from pathlib import Path

import pytest

from tricochain.algfile import load_algebra

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def fixture_path(name: str) -> Path:
    return FIXTURES / name


@pytest.fixture(scope="session")
def one_dim():
    return load_algebra(fixture_path("tridend_1d.json"))[1]


@pytest.fixture(scope="session")
def two_dim():
    return load_algebra(fixture_path("tridend_2d.json"))[1]


@pytest.fixture(scope="session")
def one_dim_broken():
    return load_algebra(fixture_path("tridend_1d_broken.json"))[1]


@pytest.fixture(scope="session")
def two_dim_broken():
    return load_algebra(fixture_path("tridend_2d_broken.json"))[1]
