"""Temperley bijection between coverings and spanning trees.

Superimposing H (on the even sublattice) with its full planar dual
(faces plus f*) and placing a black vertex at the midpoint of every
edge of H gives the balanced bipartite graph N after f* and v* are
removed.  A spanning tree T of H rooted at v* and its complementary
dual tree T' rooted at f* orient every non-root vertex toward its
parent, and

    M = { {x, mid(e)} : e the parent edge of x in T or T' }

is a dimer covering of N; the map is the classical bijection between
coverings of N and spanning trees of H.  Conversely every covering of
G carries exactly one impurity, and within its t-move class there is a
unique member whose impurity sits on e*1 = {f*, v*}; dropping f*, v*
and the impurity lands in N.  The composite phi(pi(M)) identifies the
t-classes of G with the spanning trees of H.

The subtree T* cut out of the dual forest by the impurity curve is
recovered here without geometry: delete from T' every f*-incident dual
edge that is not one of the l-edges and keep the component of f*.  A
class contains a covering with impurity {x, y} exactly when the odd
endpoint x lies in T*.
"""

from .covering import DimerCovering, impurities, validate_covering
from .lattice import TemperleyTriple, Vertex, edge
from .moves import t_class, t_classes


class BijectionError(RuntimeError):
    """The tree correspondence failed; used as a test sentinel."""


class RootedTree:
    """A spanning tree of H or of the dual, oriented toward its root."""

    def __init__(self, host, root, up):
        self.host = host          # "H" or "HPerp"
        self.root = root
        self.up = up              # child -> (parent, h_edge key)
        self.vertices = frozenset(up) | {root}
        self.edges = frozenset(h for _, h in up.values())

    @property
    def oriented_edges(self):
        return tuple(sorted((c, p) for c, (p, _) in self.up.items()))

    def __eq__(self, other):
        return (self.host == other.host and self.root == other.root
                and self.up == other.up)

    def __hash__(self):
        return hash((self.host, self.root, self.edges))

    def __repr__(self):
        return "RootedTree(%s, root=%r, %d edges)" % (
            self.host, self.root, len(self.edges))


def _grow(host, root, vertices, adjacency):
    # BFS orientation; rejects disconnected or cyclic edge sets.
    up = {}
    seen = {root}
    queue = [root]
    n_edges = 0
    for nbrs in adjacency.values():
        n_edges += len(nbrs)
    n_edges //= 2
    while queue:
        nxt = []
        for v in queue:
            for w, key in adjacency.get(v, ()):
                if w not in seen:
                    seen.add(w)
                    up[w] = (v, key)
                    nxt.append(w)
        queue = sorted(nxt)
    if seen != set(vertices) or n_edges != len(vertices) - 1:
        raise BijectionError("edge set is not a spanning tree of %s" % host)
    return RootedTree(host, root, up)


def tree_of_h(tri: TemperleyTriple, h_edges) -> RootedTree:
    """Orient a spanning edge set of H toward the root v*."""
    adjacency = {v: [] for v in tri.h_vertices}
    for e in h_edges:
        u, v = e
        adjacency[u].append((v, e))
        adjacency[v].append((u, e))
    return _grow("H", tri.v_star, tri.h_vertices, adjacency)


def dual_tree(tri: TemperleyTriple, t: RootedTree) -> RootedTree:
    """The complementary spanning tree of the full dual, rooted at f*."""
    adjacency = {v: [] for v in tri.h_perp.vertices}
    for u, v, h in tri.h_perp.dual_edges:
        if h not in t.edges:
            adjacency[u].append((v, h))
            adjacency[v].append((u, h))
    return _grow("HPerp", tri.f_star, tri.h_perp.vertices, adjacency)


def temperley_forward(tri: TemperleyTriple, t: RootedTree) -> DimerCovering:
    """The covering of N matching every non-root vertex to its parent edge."""
    dimers = []
    for x, (_, h) in t.up.items():
        dimers.append(edge(x, tri.black_of_h_edge[h]))
    for u, (_, h) in dual_tree(tri, t).up.items():
        dimers.append(edge(u, tri.black_of_h_edge[h]))
    return validate_covering(tri.n, dimers)


def phi(tri: TemperleyTriple, m: DimerCovering) -> RootedTree:
    """Read the spanning tree of H off a covering of N."""
    h_edges = set()
    for x in tri.h_vertices:
        if x == tri.v_star:
            continue
        h_edges.add(tri.h_edge_of_black[m.mate(x)])
    return tree_of_h(tri, h_edges)


def pi(tri: TemperleyTriple, m: DimerCovering) -> DimerCovering:
    """Project a covering of G to N through its t-class.

    The class contains exactly one member whose impurity is e*1; strip
    f*, v* and that impurity from it.
    """
    hits = [c for c in t_class(m) if tri.e_star1 in c.dimers]
    if len(hits) != 1:
        raise BijectionError(
            "t-class carries %d coverings with impurity e*1" % len(hits))
    dimers = [d for d in hits[0].dimers if d != tri.e_star1]
    return validate_covering(tri.n, dimers)


def class_bijection(tri: TemperleyTriple, coverings) -> dict:
    """Map each t-class of the coverings to its spanning tree of H.

    Keyed by the class representative (least dimer tuple); verified to
    be injective on classes and to hit every tree exactly once when
    compared against an independent tree enumeration by the caller.
    """
    classes = {}
    for cls in t_classes(coverings):
        rep = min(cls, key=lambda c: c.dimers)
        classes[rep] = phi(tri, pi(tri, rep))
    trees = list(classes.values())
    if len({t.edges for t in trees}) != len(trees):
        raise BijectionError("two t-classes mapped to the same tree")
    return classes


def impurity_support(tri: TemperleyTriple, t: RootedTree) -> frozenset:
    """Vertices of T*: where the class of t can host its impurity.

    Cut the dual tree at f*, keeping only the l-edges, and return the
    f*-component.  f* itself always qualifies.
    """
    tp = dual_tree(tri, t)
    adjacency = {v: [] for v in tp.vertices}
    for c, (p, h) in tp.up.items():
        if tri.f_star in (c, p) and h not in tri.h_perp.l_edges:
            continue
        adjacency[c].append(p)
        adjacency[p].append(c)
    seen = {tri.f_star}
    stack = [tri.f_star]
    while stack:
        v = stack.pop()
        for w in adjacency[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


def initial_covering(tri: TemperleyTriple) -> DimerCovering:
    """A deterministic covering of G: BFS tree of H plus the e*1 impurity."""
    adjacency = {v: [] for v in tri.h_vertices}
    for e in tri.h_edges:
        u, v = e
        adjacency[u].append((v, e))
        adjacency[v].append((u, e))
    up = {}
    seen = {tri.v_star}
    queue = [tri.v_star]
    while queue:
        nxt = []
        for v in queue:
            for w, key in sorted(adjacency[v]):
                if w not in seen:
                    seen.add(w)
                    up[w] = (v, key)
                    nxt.append(w)
        queue = sorted(nxt)
    t = RootedTree("H", tri.v_star, up)
    m = temperley_forward(tri, t)
    return validate_covering(tri.g, m.dimers + (tri.e_star1,))
