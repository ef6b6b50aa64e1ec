"""Shared fixtures: the worked regions and a four-impurity diamond.

The L-region and the strips are the regions every exact number in the
suite was derived on.  The diamond is a hand-transcribed 16-dimer
configuration on a larger normal graph with k = 4; it exercises every
slit-curve shape (nested curves, curves hugging the boundary, trivial
two-arc curves) in a single covering.
"""

import pytest

from octadimer.covering import validate_covering
from octadimer.lattice import (build_normal_graph, build_region, ell_region,
                               strip_region)
from octadimer.oracle import enumerate_coverings

# Diamond 0 <= x+y <= 6, 0 <= x-y <= 8 and a covering of it with
# impurities on {(0,0),(1,1)}, {(3,3),(4,2)}, {(4,-2),(5,-1)},
# {(4,-4),(5,-3)}.
DIAMOND_DIMERS = (
    ((1, 0), (2, 0)), ((4, -1), (4, 0)), ((5, 0), (6, 0)),
    ((2, 1), (2, 2)), ((3, 1), (3, 2)), ((4, 1), (5, 1)),
    ((1, -1), (2, -1)), ((3, -1), (3, 0)), ((6, -1), (7, -1)),
    ((5, -2), (6, -2)), ((3, -3), (4, -3)), ((2, -2), (3, -2)),
    ((0, 0), (1, 1)), ((3, 3), (4, 2)), ((4, -2), (5, -1)),
    ((4, -4), (5, -3)),
)


def unit_square_graph():
    return build_normal_graph([(0, 0), (1, 0), (0, 1), (1, 1)])


@pytest.fixture(scope="session")
def ell():
    return build_region(ell_region())


@pytest.fixture(scope="session")
def strip1():
    return build_region(strip_region(1))


@pytest.fixture(scope="session")
def strip2():
    return build_region(strip_region(2))


@pytest.fixture(scope="session")
def ell_coverings(ell):
    return enumerate_coverings(ell.g)


@pytest.fixture(scope="session")
def diamond():
    verts = [(x, y) for x in range(-5, 10) for y in range(-9, 8)
             if 0 <= x + y <= 6 and 0 <= x - y <= 8]
    g = build_normal_graph(verts)
    return validate_covering(g, DIAMOND_DIMERS)
