import mpmath as mp
import numpy as np
import pytest


@pytest.fixture(scope="session")
def mp50():
    """mpmath context at 50 significant digits for oracle computations."""
    old = mp.mp.dps
    mp.mp.dps = 50
    yield mp
    mp.mp.dps = old


@pytest.fixture()
def rng():
    return np.random.default_rng(20240817)
