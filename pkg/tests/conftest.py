import numpy as np
import pytest

from qscat import PhysicsContext


@pytest.fixture
def rng():
    return np.random.default_rng(20260809)


@pytest.fixture
def ctx():
    return PhysicsContext()
