from pathlib import Path

import pytest

from e7dirac.atlas_ingest import enumerate_phi, parse_fixture
from e7dirac.screening import compute_certs, enumerate_omega, enumerate_usmall_ktypes

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def census():
    return enumerate_usmall_ktypes()


@pytest.fixture(scope="session")
def certs(census):
    return compute_certs(census)


@pytest.fixture(scope="session")
def omega():
    return enumerate_omega()


@pytest.fixture(scope="session")
def fixture_dir():
    if not FIXTURE_DIR.is_dir():
        pytest.skip("fixture directory not present")
    return FIXTURE_DIR


@pytest.fixture(scope="session")
def kgb(fixture_dir):
    return parse_fixture("kgb", (fixture_dir / "kgb.txt").read_text())


@pytest.fixture(scope="session")
def census_params(fixture_dir):
    return parse_fixture("params", (fixture_dir / "params_1011108.txt").read_text())


@pytest.fixture(scope="session")
def table_rows(fixture_dir):
    return parse_fixture("table", (fixture_dir / "table.txt").read_text())


@pytest.fixture(scope="session")
def phi_census(kgb):
    return enumerate_phi(kgb)
