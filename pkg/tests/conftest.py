import pytest

from weilcanon.symplectic import SymplecticSpace
from weilcanon.weil import WeilContext


@pytest.fixture(scope="session")
def ctx31():
    return WeilContext(SymplecticSpace(3, 1))


@pytest.fixture(scope="session")
def ctx51():
    return WeilContext(SymplecticSpace(5, 1))


@pytest.fixture(scope="session")
def ctx32():
    return WeilContext(SymplecticSpace(3, 2))
