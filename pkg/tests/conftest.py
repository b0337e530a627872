"""Shared fixtures."""

import numpy as np
import pytest

from bgcats.adapters.config import InMemoryConfigAdapter
from bgcats.adapters.logging import SilentLogger
from bgcats.domain.value_objects import SpaceConfig


@pytest.fixture
def silent_logger():
    return SilentLogger()


@pytest.fixture
def config():
    return InMemoryConfigAdapter()


@pytest.fixture
def rng():
    return np.random.default_rng(42)


@pytest.fixture
def one_mode_space():
    return SpaceConfig(mode_count=1, per_mode_cutoff=40)


@pytest.fixture
def two_mode_space():
    return SpaceConfig(mode_count=2, per_mode_cutoff=24)
