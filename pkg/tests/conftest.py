import pytest

from modzeta import PrecisionCtx


@pytest.fixture(scope="session")
def ctx25():
    return PrecisionCtx(25)


@pytest.fixture(scope="session")
def ctx30():
    return PrecisionCtx(30)


@pytest.fixture(scope="session")
def ctx40():
    return PrecisionCtx(40)


@pytest.fixture(scope="session")
def ctx50():
    return PrecisionCtx(50)
