import pytest

from tilespace.apcomplex import canonical_placement
from tilespace.dataset import load_dataset


@pytest.fixture(scope="session")
def d():
    return load_dataset()


@pytest.fixture(scope="session")
def placement(d):
    return canonical_placement(d)
