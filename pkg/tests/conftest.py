import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(scope="session")
def table():
    from paraq.constants import assemble_constants

    return assemble_constants()


@pytest.fixture(scope="session")
def ledger():
    from paraq.ledger import build_ledger

    return build_ledger()


@pytest.fixture(scope="session")
def fatou_explorer():
    from paraq.explorer import FatouExplorer

    return FatouExplorer()
