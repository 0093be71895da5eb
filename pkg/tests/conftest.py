import pytest

from arrcohom import catalog


@pytest.fixture(scope="session")
def members():
    """Every catalog instance with at most 12 lines."""
    return catalog.sweep_members(max_lines=12)


@pytest.fixture(scope="session")
def braid():
    return catalog.braid_a3()
