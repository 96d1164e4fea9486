import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from latticelab.generators import boolean, chain, element, figure_lattice, weak_order  # noqa: E402


@pytest.fixture
def hexagon():
    return weak_order("A", 2)


@pytest.fixture
def diamond():
    return boolean(2)


@pytest.fixture
def fig():
    return figure_lattice


@pytest.fixture
def named():
    """Look up an element index by its display name."""
    return element


@pytest.fixture
def chain3():
    return chain(3)
