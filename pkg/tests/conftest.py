"""
Shared fixtures for the urhydro test suite.
"""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from urhydro.physics import EosParams, PrimState

CONFIG_DIR = Path(__file__).parent.parent / 'config'


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full-resolution runs (deselect with -m \"not slow\")")


@pytest.fixture
def eos():
    """cs2 = 1/3, the radiation-dominated case."""
    return EosParams.from_string("1/3")


@pytest.fixture
def shock_tube_states():
    """L = (1, 1/2, 1/3), R = (20, 1/2, 1/2)."""
    return PrimState(1.0, 0.5, 1.0 / 3.0), PrimState(20.0, 0.5, 0.5)


@pytest.fixture
def intersection_states():
    """L = (10, 1/2, 1/2), R = (1, 1/2, 1/2)."""
    return PrimState(10.0, 0.5, 0.5), PrimState(1.0, 0.5, 0.5)


@pytest.fixture
def config_dir():
    return CONFIG_DIR
