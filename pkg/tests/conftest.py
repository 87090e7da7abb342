import pytest

from sgt.library import library


@pytest.fixture(scope="session")
def lib():
    return library()
