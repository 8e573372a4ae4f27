import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from bstar.constructions import (cross_polytope, rp2_6, simplex,
                                 simplex_boundary, torus7)


@pytest.fixture(scope="session")
def octahedron():
    return cross_polytope(3)


@pytest.fixture(scope="session")
def torus():
    return torus7()


@pytest.fixture(scope="session")
def projective_plane():
    return rp2_6()


@pytest.fixture(scope="session")
def triangle():
    return simplex(2)


@pytest.fixture(scope="session")
def sphere2():
    return simplex_boundary(3)
