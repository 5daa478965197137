import pytest

from algebra.exact_scalars import Level


@pytest.fixture
def level3():
    return Level(3)


@pytest.fixture
def level4():
    return Level(4)


@pytest.fixture
def level5():
    return Level(5)


@pytest.fixture
def level6():
    return Level(6)


@pytest.fixture
def level7():
    return Level(7)
