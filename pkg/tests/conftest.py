from pathlib import Path

import pytest

from constella import fixtures
from constella.enumerate import (
    enumerate_li_constellations,
    enumerate_lr_semigroupoids,
)

PROJECT_ROOT = Path(__file__).resolve().parent.parent
FIXTURE_DIR = PROJECT_ROOT / "fixtures"


@pytest.fixture(scope="session")
def all_fixtures():
    return fixtures.all_fixtures()


@pytest.fixture(scope="session")
def lr_fixtures():
    return fixtures.lr_fixtures()


@pytest.fixture(scope="session")
def census_lrs_2():
    return list(enumerate_lr_semigroupoids(1)) + list(enumerate_lr_semigroupoids(2))


@pytest.fixture(scope="session")
def census_lic_2():
    return list(enumerate_li_constellations(1)) + list(enumerate_li_constellations(2))


@pytest.fixture(scope="session")
def fixture_dir():
    return FIXTURE_DIR
