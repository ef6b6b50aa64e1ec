"""Vertex classes, normal-graph validation, and region construction."""

import pytest

from octadimer.lattice import (
    BLACK, W0, W1, ComplementNotConnectedError, InvalidFStarError,
    InvalidVStarError, NotConnectedError, Region, RegionError,
    build_normal_graph, build_region, classify_vertex, diagonal_edges,
    edge, ell_region, gamma_neighbors, is_black, is_diagonal_edge,
    is_unit_edge, is_white, midpoint, strip_region)


def test_vertex_classes():
    assert classify_vertex((0, 0)) == W0
    assert classify_vertex((1, 1)) == W1
    assert classify_vertex((1, 0)) == BLACK
    assert classify_vertex((0, 1)) == BLACK
    assert classify_vertex((-2, 4)) == W0
    assert classify_vertex((-1, 3)) == W1
    assert is_white((2, 2)) and is_white((3, 3))
    assert is_black((2, 3)) and not is_white((2, 3))


def test_gamma_neighbors():
    # whites see 4 unit + 4 diagonal neighbors, blacks only 4 unit
    nw = gamma_neighbors((0, 0))
    assert len(nw) == 8
    assert (1, 1) in nw and (1, 0) in nw and (-1, -1) in nw
    nb = gamma_neighbors((1, 0))
    assert len(nb) == 4
    assert all(abs(u[0] - 1) + abs(u[1]) == 1 for u in nb)
    # adjacency is symmetric
    assert (0, 0) in gamma_neighbors((1, 1))


def test_edge_helpers():
    e = edge((1, 1), (0, 0))
    assert e == ((0, 0), (1, 1))
    assert is_diagonal_edge(e) and not is_unit_edge(e)
    u = edge((1, 0), (0, 0))
    assert is_unit_edge(u) and not is_diagonal_edge(u)
    assert midpoint(((0, 0), (2, 0))) == (1, 0)


def test_unit_square_graph():
    g = build_normal_graph([(0, 0), (1, 0), (0, 1), (1, 1)])
    assert len(g) == 4
    assert g.white_count == 2 and g.black_count == 2
    # one diagonal {(0,0),(1,1)} plus the four sides
    assert len(g.edges) == 5
    assert diagonal_edges(g) == (((0, 0), (1, 1)),)


def test_disconnected_rejected():
    with pytest.raises(NotConnectedError):
        build_normal_graph([(0, 0), (4, 0)])


def test_annulus_rejected():
    # ring of vertices around a missing center: complement splits
    ring = [(x, y) for x in range(-2, 3) for y in range(-2, 3)
            if (x, y) != (0, 0)]
    with pytest.raises(ComplementNotConnectedError):
        build_normal_graph(ring)


def test_region_of_normalizes():
    r = Region.of([[3, 1], [1, 1]], [3, 3], [2, 4])
    assert r.faces == ((1, 1), (3, 1))
    assert r.f_star == (3, 3) and r.v_star == (2, 4)


def test_strip_and_ell_factories():
    s = strip_region(2)
    assert s.faces == ((1, 1), (3, 1))
    assert s.f_star == (5, 1) and s.v_star == (4, 2)
    r = ell_region()
    assert r.faces == ((1, 1), (1, 3), (3, 1))
    assert r.f_star == (3, 3) and r.v_star == (2, 4)


def test_ell_triple_shape(ell):
    g = ell.g
    assert len(g) == 22
    assert g.white_count == 12 and g.black_count == 10
    assert len(g.edges) == 49
    assert len(diagonal_edges(g)) == 15
    assert ell.e_star1 == ((2, 4), (3, 3))
    assert ell.e_star2 == ((3, 3), (4, 2))
    assert ell.e_star1 == edge(ell.v_star, ell.f_star)
    assert ell.h_perp.d_star == 2
    # H has the 8 face corners and 10 sides; N drops f* and v*
    assert len(ell.h_vertices) == 8
    assert len(ell.h_edges) == 10
    assert len(ell.n.vertices) == 20
    assert ell.n.white_count == ell.n.black_count == 10


def test_strip_triple_shape(strip1):
    assert len(strip1.g) == 10
    assert strip1.h_perp.d_star == 1
    assert strip1.e_star1 == ((2, 2), (3, 1))
    assert strip1.e_star2 == ((2, 0), (3, 1))


def test_dual_graph_is_full_multigraph(ell):
    hp = ell.h_perp
    # one dual edge per edge of H, keyed by the crossed side
    assert len(hp.dual_edges) == len(ell.h_edges)
    assert hp.d_star == len(hp.l_edges) == 2
    assert hp.vertices == hp.faces + (ell.f_star,)
    assert hp.lattice_adjacent((1, 1), (1, 3))
    assert not hp.lattice_adjacent((1, 3), (3, 1))


def test_region_validation_errors():
    with pytest.raises(RegionError):
        build_region(Region.of([], (3, 3), (2, 4)))
    with pytest.raises(RegionError):
        build_region(Region.of([(0, 0)], (3, 3), (2, 4)))
    with pytest.raises(RegionError):
        build_region(Region.of([(1, 1), (5, 1)], (3, 3), (2, 4)))
    # 3x3 face ring around a missing center face
    ring = [(1, 1), (3, 1), (5, 1), (1, 3), (5, 3), (1, 5), (3, 5), (5, 5)]
    with pytest.raises(RegionError):
        build_region(Region.of(ring, (7, 1), (6, 2)))


def test_f_star_validation():
    with pytest.raises(InvalidFStarError):
        build_region(Region.of([(1, 1)], (2, 2), (2, 2)))
    with pytest.raises(InvalidFStarError):
        build_region(Region.of([(1, 1)], (1, 1), (2, 2)))
    with pytest.raises(InvalidFStarError):
        build_region(Region.of([(1, 1)], (7, 7), (2, 2)))
    # C-shaped region open at (1,3): putting f* there closes the ring
    # and traps (3,3) inside
    cee = [(1, 1), (3, 1), (5, 1), (5, 3), (5, 5), (3, 5), (1, 5)]
    with pytest.raises(InvalidFStarError):
        build_region(Region.of(cee, (1, 3), (0, 2)))


def test_v_star_validation():
    with pytest.raises(InvalidVStarError):
        build_region(Region.of([(1, 1)], (3, 1), (0, 0)))
    with pytest.raises(InvalidVStarError):
        build_region(Region.of([(1, 1)], (3, 1), (3, 1)))
    # (4,0) is a corner of f* but {f*,(4,0)} is not a boundary diagonal
    # of G: both flanking blacks exist
    with pytest.raises(InvalidVStarError):
        build_region(Region.of([(1, 1)], (3, 1), (4, 0)))


def test_strip_v_star_choices():
    # the two legal v* for strip n=1 are the corners shared with the face
    build_region(Region.of([(1, 1)], (3, 1), (2, 2)))
    build_region(Region.of([(1, 1)], (3, 1), (2, 0)))
