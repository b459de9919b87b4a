import pytest

from smallpart.partitions import build_count_table


@pytest.fixture(scope="session")
def table():
    return build_count_table(40)
