import math

import numpy as np
import pytest

import wdiam as w


@pytest.fixture
def w3_equal():
    return w.make_wstate([1.0, 1.0, 1.0], renormalize=True)


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)


def pipeline_g(state):
    """Region-dispatched exact overlap g."""
    return w.overlap_from_diameter(state, w.solve(state)).g


@pytest.fixture
def slight_state():
    # four small coefficients plus c_N^2 = 0.6 > 1/2
    rest = math.sqrt(0.1)
    return w.make_wstate([rest] * 4 + [math.sqrt(0.6)], renormalize=True)
