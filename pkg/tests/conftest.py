import math
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gcg.families import rotation_from_layout, standard_graph, tilde_graph  # noqa: E402
from gcg.graph import TrivalentPlanarGraph  # noqa: E402


def k4() -> TrivalentPlanarGraph:
    """Tetrahedron: a triangle 1-2-3 around the centre vertex 4."""
    edges = [(1, 2), (2, 3), (1, 3), (1, 4), (2, 4), (3, 4)]
    pos = {v: (math.cos(2 * math.pi * v / 3), math.sin(2 * math.pi * v / 3)) for v in (1, 2, 3)}
    pos[4] = (0.0, 0.0)
    return TrivalentPlanarGraph(4, edges, rotation_from_layout(4, edges, pos), name="K4")


@pytest.fixture(scope="session")
def K4():
    return k4()


@pytest.fixture(scope="session")
def G7():
    return standard_graph(7)


@pytest.fixture(scope="session")
def G11():
    return standard_graph(11)


@pytest.fixture(scope="session")
def G12():
    return standard_graph(12)


@pytest.fixture(scope="session")
def tilde7():
    return tilde_graph(7)
