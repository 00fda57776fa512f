from hiertect.core import TreeModel
from hiertect.lib.ising import scaled_schedule, constrained_schedule
import numpy as np
import pytest

@pytest.fixture
def rng():
    return np.random.default_rng(2024)

@pytest.fixture
def small_tree():
    return TreeModel(2, 2)

@pytest.fixture
def small_schedule(small_tree):
    return scaled_schedule(small_tree, 0.75)

@pytest.fixture
def detection_tree():
    return TreeModel(6, 4)

@pytest.fixture
def detection_schedule(detection_tree):
    return constrained_schedule(detection_tree, 0.75, 0.5)

def block_similarity(blocks, within = 0.9, cross = 0.1):
    """
        Similarity matrix equal to 'within' inside each block and 'cross'
        everywhere else
    """
    p = sum(len(b) for b in blocks)
    R = np.full((p, p), cross)
    for b in blocks:
        idx = np.array(b)
        R[np.ix_(idx, idx)] = within
    return R
