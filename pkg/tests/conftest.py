import pytest

from vrhq import domination, hypercube


@pytest.fixture(scope="session")
def gc64():
    return hypercube.build_hamming_graph(6, 4, complemented=True)


@pytest.fixture(scope="session")
def gc64_exact(gc64):
    # shared across the acceptance gate and the solver regression tests so
    # the search runs once per session
    return domination.exact_gamma_t(gc64, time_limit=3600.0)
