import numpy as np
import pytest

from folded_rs.frs import canonical_params


@pytest.fixture(scope="session")
def P():
    return canonical_params()


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
