import random

import pytest

from spectral_lb import catalog


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture(scope="session")
def petersen():
    return catalog.petersen()


@pytest.fixture(scope="session")
def octahedron():
    return catalog.octahedron()
