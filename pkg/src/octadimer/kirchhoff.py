"""Counting coverings and impurity probabilities by exact linear algebra.

The number of t-classes equals the number of spanning trees of the
full dual of H, which by the matrix-tree theorem is |det A| for the
negative Laplacian A with the f* row and column removed.  Every non-f*
diagonal entry is pinned at 4, one per dual edge at the face, whether
or not the neighbor on the other side survives into A; the missing
neighbors act as absorbing boundary for the walk below.

Writing p_v for the probability that v belongs to T* under a uniform
spanning tree, p solves A p = b where b marks the faces reachable from
f* through an l-edge, and p_v is also the probability that a simple
random walk started at v first reaches f* through an l-edge.  A class
whose T* contains v hosts one covering per diagonal edge at v: four
for every face vertex, d* + 1 for f*.  Hence

    #coverings with impurity at {x, .} = |det A| p_x,
    #coverings in total = |det A| (4 sum_v p_v + d* - 3),

the sum running over all of V(H-perp) with p_f* = 1.

Everything is computed over exact integers and rationals; determinants
use fraction-free elimination so the intermediate values stay integral.
"""

from dataclasses import dataclass
from fractions import Fraction

from .lattice import (InvalidInputError, TemperleyTriple, Edge,
                      is_diagonal_edge)


class SingularSystemError(InvalidInputError):
    pass


class NotDiagonalError(InvalidInputError):
    pass


class NotInGError(InvalidInputError):
    pass


@dataclass(frozen=True)
class LaplacianSystem:
    order: tuple          # V(H-perp) minus f*, lexicographic
    a: tuple              # rows of the reduced negative Laplacian
    b: tuple              # l-edge indicator
    d_star: int


def build_system(hp) -> LaplacianSystem:
    """The reduced negative Laplacian and boundary vector of a dual graph."""
    order = tuple(sorted(hp.faces))
    index = {v: i for i, v in enumerate(order)}
    n = len(order)
    a = [[0] * n for _ in range(n)]
    b = [0] * n
    for i, v in enumerate(order):
        a[i][i] = 4
    for u, v, h in hp.dual_edges:
        if hp.f_star in (u, v):
            face = v if u == hp.f_star else u
            if h in hp.l_edges:
                b[index[face]] = 1
        else:
            a[index[u]][index[v]] = -1
            a[index[v]][index[u]] = -1
    return LaplacianSystem(order, tuple(map(tuple, a)), tuple(b), hp.d_star)


def _det(rows):
    """Fraction-free (Bareiss) determinant of an integer matrix."""
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[-1][-1]


def tree_count(sys: LaplacianSystem) -> int:
    """|det A|: spanning trees of the full dual, so t-classes of G."""
    return abs(_det(sys.a))


def solve_p(sys: LaplacianSystem, f_star=None) -> dict:
    """Exact solution of A p = b, with p_f* = 1 adjoined when given."""
    n = len(sys.order)
    m = [[Fraction(x) for x in row] + [Fraction(sys.b[i])]
         for i, row in enumerate(sys.a)]
    for k in range(n):
        pivot = next((i for i in range(k, n) if m[i][k]), None)
        if pivot is None:
            raise SingularSystemError("negative Laplacian is singular")
        m[k], m[pivot] = m[pivot], m[k]
        for i in range(n):
            if i != k and m[i][k]:
                r = m[i][k] / m[k][k]
                m[i] = [x - r * y for x, y in zip(m[i], m[k])]
    p = {v: m[i][n] / m[i][i] for i, v in enumerate(sys.order)}
    if f_star is not None:
        p[f_star] = Fraction(1)
    return p


def _system(tri: TemperleyTriple):
    sys = build_system(tri.h_perp)
    det = tree_count(sys)
    p = solve_p(sys, tri.f_star)
    return sys, det, p


def coverings_with_impurity(tri: TemperleyTriple, e: Edge) -> int:
    """How many coverings of G put their impurity on the diagonal e."""
    e = (tuple(e[0]), tuple(e[1]))
    e = e if e[0] <= e[1] else (e[1], e[0])
    if not is_diagonal_edge(e):
        raise NotDiagonalError("%r is not a diagonal edge" % (e,))
    if e not in tri.g.edge_set:
        raise NotInGError("%r is not an edge of G" % (e,))
    _, det, p = _system(tri)
    x = e[0] if e[0][0] % 2 else e[1]
    count = det * p[x]
    assert count.denominator == 1
    return int(count)


def total_coverings(tri: TemperleyTriple) -> int:
    """|det A| (4 sum p_v + d* - 3) over all dual vertices."""
    sys, det, p = _system(tri)
    total = det * (4 * sum(p.values()) + sys.d_star - 3)
    assert total.denominator == 1
    return int(total)


def impurity_probability(tri: TemperleyTriple, e: Edge) -> Fraction:
    """Chance that a uniform covering of G has its impurity on e."""
    return Fraction(coverings_with_impurity(tri, e), total_coverings(tri))
