import pytest

from galcert import catalogue


@pytest.fixture
def s3():
    return catalogue.symmetric(3)


@pytest.fixture
def s4():
    return catalogue.symmetric(4)


@pytest.fixture
def s5():
    return catalogue.symmetric(5)


@pytest.fixture
def q8():
    return catalogue.quaternion8()
