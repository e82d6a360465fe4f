import pytest

from multsub import sieve


@pytest.fixture(scope="session")
def table_10k():
    return sieve.build(10**4)


@pytest.fixture(scope="session")
def table_100k():
    return sieve.build(10**5)
