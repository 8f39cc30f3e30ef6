import pytest

from genset_lab.gensets import max_minimal_genset_size


@pytest.fixture(scope="session")
def exact_m():
    """Session cache for the exhaustive m(G) searches (m(S6) alone takes a
    few minutes, and two acceptance criteria need it)."""
    cache = {}

    def get(name, G):
        if name not in cache:
            m, witness, exact = max_minimal_genset_size(G)
            assert exact, f"m({name}) search was not exhaustive"
            cache[name] = m
        return cache[name]

    return get
