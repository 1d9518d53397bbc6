"""
Shared test fixtures and configuration.

Provides reusable fixtures for all test files including small graphs,
family instances with cached automorphism groups, voltages, and FastAPI
test clients.
"""

import pytest
import os
import tempfile
import shutil

from src import config as app_config
from src.covers import Dip5Voltage, family_voltage
from src.graphs import Graph, complete_bipartite, complete_graph, cycle_graph
from src.graphs.constructions import FamilyId, family
from src.services import AnalysisService
from src.symmetry import aut_group


# =============================================================================
# MARKERS
# =============================================================================

def pytest_configure(config):
    config.addinivalue_line("markers", "slow: instances taking more than a few seconds")
    config.addinivalue_line("markers", "deep: large instances, run only with VERIFY_DEEP=true")


def pytest_collection_modifyitems(config, items):
    if app_config._get_bool("VERIFY_DEEP", False):
        return
    skip_deep = pytest.mark.skip(reason="set VERIFY_DEEP=true to run large instances")
    for item in items:
        if "deep" in item.keywords:
            item.add_marker(skip_deep)


# =============================================================================
# DIRECTORY FIXTURES
# =============================================================================

@pytest.fixture
def test_data_dir():
    """Provide a temporary directory for written files."""
    temp_dir = tempfile.mkdtemp(prefix="pentagraph_test_")
    yield temp_dir

    if os.path.exists(temp_dir):
        shutil.rmtree(temp_dir, ignore_errors=True)


# =============================================================================
# SMALL GRAPH FIXTURES
# =============================================================================

@pytest.fixture
def k6():
    return complete_graph(6)


@pytest.fixture
def k55():
    return complete_bipartite(5, 5)


@pytest.fixture
def c6():
    return cycle_graph(6)


@pytest.fixture
def petersen():
    """Petersen graph: outer 5-cycle, spokes, inner pentagram."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.build(10, edges)


# =============================================================================
# FAMILY FIXTURES
# =============================================================================

@pytest.fixture(scope="session")
def family_cache():
    """Session-wide cache of (named graph, Aut) pairs keyed by instance string."""
    cache = {}

    def get(name: str):
        if name not in cache:
            ng = family(name)
            cache[name] = (ng, aut_group(ng.graph))
        return cache[name]

    return get


@pytest.fixture(scope="session")
def analysis_service():
    """Session-wide AnalysisService so Aut groups are computed once."""
    return AnalysisService()


# =============================================================================
# VOLTAGE FIXTURES
# =============================================================================

@pytest.fixture
def cgd2_11_voltage() -> Dip5Voltage:
    return family_voltage(FamilyId.CGD2_P2, 11)


@pytest.fixture
def basis_voltage_p3() -> Dip5Voltage:
    """Rank-4 basis voltage (0, e1, e2, e3, e4) over F_3."""
    return family_voltage(FamilyId.CGD_P4, 3)


@pytest.fixture
def budgets_env():
    """Restore module-level budgets after a test patches them."""
    saved = {k: getattr(app_config, k) for k in ('AUT_MAX_VERTICES', 'ELEMENT_BUDGET', 'CENSUS_MAX_P')}
    yield app_config
    for k, v in saved.items():
        setattr(app_config, k, v)
