import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from tn2alg import TOPOLOGICAL_N2, WITT


@pytest.fixture
def alg():
    return TOPOLOGICAL_N2


@pytest.fixture
def witt():
    return WITT
