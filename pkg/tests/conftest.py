import pytest

from prodrule import SymbolicTable


@pytest.fixture(scope="session")
def table():
    """One shared symbolic table; entries only ever accumulate."""
    return SymbolicTable()
