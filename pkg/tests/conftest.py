import pytest

from instances import d5_triple
from richardson.attach import attach_chains


@pytest.fixture
def d5():
    return d5_triple()


@pytest.fixture
def d5_chains(d5):
    return attach_chains(*d5)


@pytest.fixture
def d5_grid(d5_chains):
    return d5_chains.grid
