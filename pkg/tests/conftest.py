import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from kdmv.gen import connected_graphs_upto


@pytest.fixture(scope="session")
def connected_upto_6():
    return connected_graphs_upto(6)


@pytest.fixture(scope="session")
def connected_upto_7():
    return connected_graphs_upto(7)
