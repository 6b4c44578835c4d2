import pytest

from rigidkit.homs import is_rigid
from rigidkit.search import search_rigid

RIGID_BASE_SEED = 0
RIGID_BASE_BUDGET = 1_000_000


@pytest.fixture(scope="session")
def rigid_base_8():
    """The first rigid symmetric 8-vertex graph the seeded random search finds."""
    report = search_rigid(
        8, symmetric=True, mode="random",
        budget=RIGID_BASE_BUDGET, seed=RIGID_BASE_SEED, stop_after=1,
    )
    assert report.rigid_found, "seeded search found no rigid base within budget"
    base = report.rigid_found[0]
    assert is_rigid(base).rigid
    return base
