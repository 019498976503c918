from __future__ import annotations

import os
import sys
from pathlib import Path

import pytest

sys.path.insert(0, os.path.dirname(__file__))

DATA = Path(__file__).parent / "data"


def load_order7():
    from distspec.graph6 import read_graph6_stream

    with open(DATA / "connected7.g6") as fh:
        return list(read_graph6_stream(fh))


def load_census_graphs():
    """Connected graphs n = 1..7: built-in enumerator to 6, supplied stream for 7."""
    from distspec.graph import enumerate_connected

    return [g for n in range(1, 7) for g in enumerate_connected(n)] + load_order7()


@pytest.fixture(scope="session")
def census_graphs():
    return load_census_graphs()
