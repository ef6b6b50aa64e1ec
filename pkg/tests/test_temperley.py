"""Tree encodings of coverings and the class-level bijection.

The heavy test sweeps all 328 coverings of the L-region: for every
t-class the enclosed dual tree T* must be the same for each member,
must equal the tree predicted by impurity_support on the class's
spanning tree, the class size must be the total diagonal degree of T*,
and the impurity edges seen across the class must be exactly the
diagonals whose odd-odd endpoint lies in T*.
"""

from collections import defaultdict
from fractions import Fraction

from octadimer.covering import impurities, validate_covering
from octadimer.kirchhoff import build_system, solve_p
from octadimer.lattice import diagonal_edges
from octadimer.moves import t_class, t_classes
from octadimer.oracle import enumerate_spanning_trees
from octadimer.slits import enclosed_dual_tree, forests, impurity_curve
from octadimer.temperley import (class_bijection, dual_tree,
                                 impurity_support, initial_covering, phi, pi,
                                 temperley_forward, tree_of_h)


def all_h_trees(tri):
    triples = [(e[0], e[1], e) for e in tri.h_edges]
    return enumerate_spanning_trees(tri.h_vertices, triples)


def test_tree_complementarity(ell):
    for keys in all_h_trees(ell):
        t = tree_of_h(ell, keys)
        assert t.root == ell.v_star
        assert t.edges == frozenset(keys)
        tp = dual_tree(ell, t)
        assert tp.root == ell.f_star
        assert t.edges | tp.edges == ell.h_edges
        assert not (t.edges & tp.edges)


def test_forward_phi_round_trip(ell):
    for keys in all_h_trees(ell):
        t = tree_of_h(ell, keys)
        m = temperley_forward(ell, t)
        assert set(m.graph.vertices) == set(ell.n.vertices)
        assert phi(ell, m) == t


def test_initial_covering(ell, strip1, strip2):
    for tri in (ell, strip1, strip2):
        m = initial_covering(tri)
        assert impurities(m) == (tri.e_star1,)
        # the initial covering is already its class's e*1 member, so
        # projecting just strips the impurity
        r = pi(tri, m)
        assert set(r.dimers) | {tri.e_star1} == set(m.dimers)


def test_pi_projects_to_n(ell, ell_coverings):
    for m in ell_coverings[::9]:
        r = pi(ell, m)
        # the projection lives on N: no impurity left, f* and v* gone
        assert impurities(r) == ()
        assert ell.f_star not in r.mate_map()
        # re-adding e*1 recovers a G-covering t-equivalent to m
        rep = validate_covering(ell.g, r.dimers + (ell.e_star1,))
        assert rep in t_class(m)


def test_class_bijection_is_bijective(ell, ell_coverings):
    cb = class_bijection(ell, ell_coverings)
    assert len(cb) == 56
    trees = {frozenset(t.edges) for t in cb.values()}
    assert len(trees) == 56  # injective
    assert trees == {frozenset(k) for k in all_h_trees(ell)}  # surjective


def test_support_frequencies_match_p(ell):
    sys = build_system(ell.h_perp)
    p = solve_p(sys, ell.f_star)
    hits = defaultdict(int)
    trees = all_h_trees(ell)
    for keys in trees:
        sup = impurity_support(ell, tree_of_h(ell, keys))
        assert ell.f_star in sup
        for v in sup:
            hits[v] += 1
    for v, pv in p.items():
        assert Fraction(hits[v], len(trees)) == pv


def test_class_structure(ell, ell_coverings):
    diag_deg = defaultdict(int)
    for e in diagonal_edges(ell.g):
        for x in e:
            if x[0] % 2:
                diag_deg[x] += 1
    assert diag_deg[ell.f_star] == ell.h_perp.d_star + 1

    for cls in t_classes(ell_coverings):
        rep = min(cls, key=lambda m: m.dimers)
        sup = impurity_support(ell, phi(ell, pi(ell, rep)))
        # every member's impurity curve encloses the same dual tree
        for m in cls:
            (e,) = impurities(m)
            t = enclosed_dual_tree(impurity_curve(m, e), forests(m))
            assert t.vertices == sup
        assert len(cls) == sum(diag_deg[x] for x in sup)
        class_imps = {imp for m in cls for imp in impurities(m)}
        want = {e for e in diagonal_edges(ell.g)
                if (e[0] if e[0][0] % 2 else e[1]) in sup}
        assert class_imps == want
