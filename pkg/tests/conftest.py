import pytest

from gl2diagrams.family import build_family
from gl2diagrams.galois import GaloisParams
from gl2diagrams.lattice import parse_walk

EXAMPLE_WALK = "0,0;1,0;1,1;0,1"


@pytest.fixture(scope="session")
def base():
    return GaloisParams(5, 2, 0, 3, 2)


@pytest.fixture(scope="session")
def base_family(base):
    return build_family(base, parse_walk(EXAMPLE_WALK, 2))


@pytest.fixture(scope="session")
def base_diagram(base, base_family):
    from gl2diagrams.explicit import realize_diagram
    return realize_diagram(base, base_family)
