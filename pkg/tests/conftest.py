"""Shared fixtures: seeded randomness and small random inputs."""

import random

import pytest

from app.models.distribution import JointDistribution
from app.models.power_series import NCSeries
from app.tools.sampling import random_distribution, random_series


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20250117)


@pytest.fixture
def make_series(rng):
    def _make(n: int, d: int, density: float = 0.7, invertible: bool = False) -> NCSeries:
        return random_series(n, d, rng, density=density, invertible=invertible)
    return _make


@pytest.fixture
def make_distribution(rng):
    def _make(n: int, d: int, tracial: bool = False, nonzero_mean: bool = False) -> JointDistribution:
        return random_distribution(n, d, rng, tracial=tracial, nonzero_mean=nonzero_mean)
    return _make
