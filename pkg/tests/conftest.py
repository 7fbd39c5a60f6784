import pytest

from walshforge.field import FieldCtx


@pytest.fixture(scope="session")
def ctx3():
    return FieldCtx(3)


@pytest.fixture(scope="session")
def ctx5():
    return FieldCtx(5)


@pytest.fixture(scope="session")
def ctx7():
    return FieldCtx(7)


@pytest.fixture(scope="session")
def ctx9():
    return FieldCtx(9)
