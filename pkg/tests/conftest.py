import pytest

from properconn import build_counterexample


@pytest.fixture(scope="session")
def mini_pair():
    return build_counterexample("mini", 1)


@pytest.fixture(scope="session")
def k33_pair():
    return build_counterexample("k33", 1)


@pytest.fixture(scope="session")
def mini(mini_pair):
    return mini_pair[0]


@pytest.fixture(scope="session")
def k33(k33_pair):
    return k33_pair[0]
