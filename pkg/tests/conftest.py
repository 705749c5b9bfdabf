"""Shared fixtures. Expensive eigensolves are session-scoped."""

from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from susydirac import (
    Grid,
    kink_superpotential,
    partner_potentials,
    zero_mode,
)

settings.register_profile(
    "default",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

# Default grid for end-to-end runs; finer grids where a tolerance needs them.
PRODUCTION = Grid(-20.0, 20.0, 4001)
FINE = Grid(-20.0, 20.0, 16001)


@pytest.fixture(scope="session")
def production_grid() -> Grid:
    return PRODUCTION


@pytest.fixture(scope="session")
def fine_grid() -> Grid:
    return FINE


@pytest.fixture(scope="session")
def kink(production_grid):
    return kink_superpotential(production_grid)


@pytest.fixture(scope="session")
def kink_pair(kink):
    return partner_potentials(kink)


@pytest.fixture(scope="session")
def kink_mode(kink):
    return zero_mode(kink)


@pytest.fixture(scope="session")
def kink_fine(fine_grid):
    return kink_superpotential(fine_grid)


@pytest.fixture(scope="session")
def kink_fine_pair(kink_fine):
    return partner_potentials(kink_fine)


@pytest.fixture(scope="session")
def kink_fine_mode(kink_fine):
    return zero_mode(kink_fine)
