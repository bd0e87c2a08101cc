import pytest

from polyspec import ZeroCache


@pytest.fixture(scope="session")
def cache():
    # one shared cache: growth is monotone and entries are immutable, so
    # sharing across tests only saves recomputation
    return ZeroCache()
