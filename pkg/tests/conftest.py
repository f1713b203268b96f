import pytest

from engine import cache
from instances.helpers import Resolved, bundled_path, load


@pytest.fixture(scope="session")
def bundle() -> Resolved:
    return load(bundled_path("bundle"))


@pytest.fixture
def fresh_cache():
    """Empty construction cache for tests that count constructions."""
    cache.clear()
    yield
    cache.clear()
