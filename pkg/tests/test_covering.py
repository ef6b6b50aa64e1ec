"""Covering validation, the impurity-count identity, JSON round trips."""

import pytest

from octadimer.covering import (DoublyCoveredVertexError, ForeignEdgeError,
                                OddImbalanceError, UncoveredVertexError,
                                covering_from_obj, covering_to_obj,
                                expected_impurity_count, impurities,
                                validate_covering)
from octadimer.lattice import build_normal_graph
from octadimer.temperley import initial_covering

from conftest import unit_square_graph


def test_unit_square_coverings():
    g = unit_square_graph()
    h = validate_covering(g, [((0, 0), (1, 0)), ((0, 1), (1, 1))])
    v = validate_covering(g, [((0, 0), (0, 1)), ((1, 0), (1, 1))])
    assert h != v
    assert h.mate((0, 0)) == (1, 0) and v.mate((0, 0)) == (0, 1)
    assert impurities(h) == () and impurities(v) == ()
    # the diagonal {(0,0),(1,1)} can never be a dimer here: the two
    # blacks it would orphan are not adjacent
    with pytest.raises(UncoveredVertexError):
        validate_covering(g, [((0, 0), (1, 1))])


def test_dimers_canonicalized():
    g = unit_square_graph()
    m = validate_covering(g, [((1, 0), (0, 0)), ((1, 1), (0, 1))])
    assert m.dimers == (((0, 0), (1, 0)), ((0, 1), (1, 1)))
    assert m == validate_covering(g, [((0, 0), (1, 0)), ((0, 1), (1, 1))])
    assert len({m, m}) == 1


def test_validation_errors():
    g = unit_square_graph()
    with pytest.raises(UncoveredVertexError):
        validate_covering(g, [((0, 0), (1, 0))])
    with pytest.raises(DoublyCoveredVertexError):
        validate_covering(g, [((0, 0), (1, 0)), ((0, 0), (0, 1)),
                              ((1, 0), (1, 1))])
    with pytest.raises(ForeignEdgeError):
        validate_covering(g, [((0, 0), (2, 0)), ((0, 1), (1, 1))])
    with pytest.raises(OddImbalanceError):
        expected_impurity_count(build_normal_graph([(0, 0)]))


def test_expected_impurity_count(ell, diamond):
    assert expected_impurity_count(unit_square_graph()) == 0
    assert expected_impurity_count(ell.g) == 1
    assert expected_impurity_count(diamond.graph) == 4


def test_diamond_impurities(diamond):
    assert impurities(diamond) == (((0, 0), (1, 1)), ((3, 3), (4, 2)),
                                   ((4, -4), (5, -3)), ((4, -2), (5, -1)))


def test_every_ell_covering_has_one_impurity(ell, ell_coverings):
    assert all(len(impurities(m)) == 1 for m in ell_coverings)


def test_json_round_trip(ell):
    m = initial_covering(ell)
    obj = covering_to_obj(m)
    assert set(obj) == {"dimers"}
    assert covering_from_obj(ell.g, obj) == m
    # round trip re-validates: corrupting the payload raises
    bad = {"dimers": obj["dimers"][1:]}
    with pytest.raises(UncoveredVertexError):
        covering_from_obj(ell.g, bad)
