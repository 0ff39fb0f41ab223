import pytest

from indtree import enumerate_connected_triangle_free


@pytest.fixture(scope="session")
def enum_cache():
    """Memoized enumeration lists shared across test modules.

    Enumeration at n=9..10 costs seconds; several tests walk the same
    streams, so each order is generated once per session.
    """
    cache: dict[int, list] = {}

    def get(n: int) -> list:
        if n not in cache:
            cache[n] = list(enumerate_connected_triangle_free(n))
        return cache[n]

    return get
