import pytest

from omlab import lattices
from omlab.corpus import load_corpus


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


@pytest.fixture(scope="session")
def mo2():
    return lattices.MO2()


@pytest.fixture(scope="session")
def o6():
    return lattices.O6()
