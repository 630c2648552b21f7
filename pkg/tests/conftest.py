import numpy as np
import pytest

from pvalent import ClassParams


@pytest.fixture
def rng():
    return np.random.default_rng(0)


@pytest.fixture
def canonical():
    # p=1, alpha=0, A=1, B=-1, mu=0, delta=1
    return ClassParams()
