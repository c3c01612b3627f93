import pytest

from bddcensus.linmap import build_phi_table


@pytest.fixture(scope="session")
def phi12():
    """A full layer-map table large enough for every small-k check."""
    return build_phi_table(12, shape="full")
