"""
Shared fixtures for springstack tests.
"""

import numpy as np
import pytest


@pytest.fixture(autouse=True)
def reset_global_settings():
    """Restore default ceilings between tests."""
    from springstack.settings import Settings, set_settings

    set_settings(Settings())
    yield
    set_settings(Settings())


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240607)


@pytest.fixture
def example_datum():
    """λ = (6,5,4) with blocks (3,3), (2,2,1), (1,1,1,1)."""
    from springstack.partitions import LeviDatum

    return LeviDatum.of([(3, 3), (2, 2, 1), (1, 1, 1, 1)], (6, 5, 4))


@pytest.fixture
def example_tableaux():
    from springstack.tableaux import StandardTableau

    return (
        StandardTableau(((1, 3, 4), (2, 5, 6))),
        StandardTableau(((1, 3), (2, 5), (4,))),
        StandardTableau(((1,), (2,), (3,), (4,))),
    )
