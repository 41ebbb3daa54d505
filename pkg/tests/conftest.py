import numpy as np
import pytest

from dunkl_lab import DunklGeometry, build_grid, profile_from_function

TEST_GEOMETRIES = [(1, 0.0), (1, 1.0), (2, 0.5), (3, 0.0), (3, 1.25)]


@pytest.fixture(scope="session")
def geometries():
    return [DunklGeometry(n, g) for n, g in TEST_GEOMETRIES]


@pytest.fixture(scope="session")
def unit_grid():
    return build_grid(14.0, 420, "uniform")


@pytest.fixture(scope="session")
def gaussian(unit_grid):
    return profile_from_function(
        unit_grid, lambda r: np.exp(-np.asarray(r) ** 2 / 2.0), tail="rapid",
        derivative=lambda r: -np.asarray(r) * np.exp(-np.asarray(r) ** 2 / 2.0))
