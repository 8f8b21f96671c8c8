"""
Pytest configuration and fixtures for CoopGamePy tests
"""

import json

import numpy as np
import pytest

from coopgamepy.coop.solutions import Bimatrix
from coopgamepy.export.game_io import GameSpec
from coopgamepy.models.counter_terrorism import basic_game


@pytest.fixture
def basic():
    """The 3x3 counter-terrorism game with B=4, c=6, b=6, C=4"""
    return basic_game()


@pytest.fixture
def basic_spec(basic):
    """GameSpec of the basic game"""
    return GameSpec.from_bimatrix(basic, 'basic')


@pytest.fixture
def prisoners_dilemma():
    """Symmetric prisoner's dilemma, cooperation pays (3, 3)"""
    a = np.array([[3.0, 0.0], [5.0, 1.0]])
    return Bimatrix(A=a, B=a.T)


@pytest.fixture
def square_game():
    """Game whose feasible set is the unit square"""
    return Bimatrix(A=[[0.0, 1.0], [0.0, 1.0]], B=[[0.0, 0.0], [1.0, 1.0]])


@pytest.fixture
def write_game(tmp_path):
    """Write a GameSpec-shaped dictionary to a file and return its path"""
    def write(data, name='game.json'):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding='utf-8')
        return path
    return write


@pytest.fixture(scope="session")
def sample_frontier():
    """Evenly spaced points (by arc length) along a feasible set's frontier chain, vertices included"""
    def sample(s, n):
        chain = np.array(s.frontier_points, dtype=float)
        if len(chain) == 1:
            return np.repeat(chain, n, axis=0)
        lengths = np.hypot(*np.diff(chain, axis=0).T)
        cumulative = np.concatenate([[0.0], np.cumsum(lengths)])
        t = np.union1d(np.linspace(0.0, cumulative[-1], n), cumulative)
        return np.column_stack([np.interp(t, cumulative, chain[:, 0]),
                                np.interp(t, cumulative, chain[:, 1])])
    return sample


@pytest.fixture
def rng():
    """Seeded random generator for randomized batches"""
    return np.random.default_rng(20240607)
