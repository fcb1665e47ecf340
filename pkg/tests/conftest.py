import pytest

from pentaca.services.coords import Navigator, build_correspondence, get_navigator
from pentaca.services.geometry import cached_patch
from pentaca.services.rules import RuleTable, shipped_rules


@pytest.fixture(scope="session")
def table() -> RuleTable:
    return shipped_rules()


@pytest.fixture(scope="session")
def nav() -> Navigator:
    return get_navigator()


@pytest.fixture(scope="session")
def patch7():
    return cached_patch(7)


@pytest.fixture(scope="session")
def mapped7(patch7):
    return patch7, build_correspondence(patch7, 6)
