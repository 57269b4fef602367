import numpy as np
import pytest

from wignerlab import Grid1D, PhysContext


@pytest.fixture(scope="session")
def ctx():
    return PhysContext()


@pytest.fixture()
def gauss_grid():
    return Grid1D(-25.0, 25.0, 513)


@pytest.fixture()
def rng():
    return np.random.default_rng(20240817)
