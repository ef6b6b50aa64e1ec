"""Dimer coverings of normal graphs and their impurity bookkeeping.

A covering is a perfect matching; the diagonal dimers are the
impurities and their number equals (|W_G| - |B_G|) / 2 independently of
the covering.
"""

from .lattice import (Edge, InvalidInputError, Vertex, edge,
                      is_diagonal_edge)


class CoveringError(InvalidInputError):
    pass


class UncoveredVertexError(CoveringError):
    def __init__(self, v):
        super().__init__("vertex %r is not covered" % (v,))
        self.vertex = v


class DoublyCoveredVertexError(CoveringError):
    def __init__(self, v):
        super().__init__("vertex %r is covered twice" % (v,))
        self.vertex = v


class ForeignEdgeError(CoveringError):
    def __init__(self, e):
        super().__init__("edge %r does not belong to the graph" % (e,))
        self.edge = e


class OddImbalanceError(CoveringError):
    pass


class DimerCovering:
    """An immutable perfect matching, dimers kept in sorted order."""

    __slots__ = ("graph", "dimers", "_mate", "_hash")

    def __init__(self, graph, dimers, mate):
        self.graph = graph
        self.dimers = dimers
        self._mate = mate
        self._hash = hash(dimers)

    def mate(self, v: Vertex) -> Vertex:
        return self._mate[v]

    def mate_map(self) -> dict:
        return dict(self._mate)

    def __eq__(self, other):
        return isinstance(other, DimerCovering) and self.dimers == other.dimers

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "DimerCovering(%d dimers)" % len(self.dimers)


def validate_covering(g, dimers) -> DimerCovering:
    """Check that dimers is a perfect matching of g and wrap it."""
    mate = {}
    canonical = []
    for e in dimers:
        u, v = e
        e = edge(tuple(u), tuple(v))
        if e not in g.edge_set:
            raise ForeignEdgeError(e)
        for w in e:
            if w in mate:
                raise DoublyCoveredVertexError(w)
        mate[e[0]] = e[1]
        mate[e[1]] = e[0]
        canonical.append(e)
    for v in g.vertices:
        if v not in mate:
            raise UncoveredVertexError(v)
    return DimerCovering(g, tuple(sorted(canonical)), mate)


def expected_impurity_count(g) -> int:
    """The invariant (|W_G| - |B_G|) / 2 of a coverable graph."""
    diff = g.white_count - g.black_count
    if diff < 0 or diff % 2:
        raise OddImbalanceError(
            "white/black imbalance %d admits no perfect matching" % diff)
    return diff // 2


def impurities(m: DimerCovering) -> tuple[Edge, ...]:
    """The diagonal dimers of m, in sorted order."""
    return tuple(e for e in m.dimers if is_diagonal_edge(e))


def covering_to_obj(m: DimerCovering) -> dict:
    return {"dimers": [[list(u), list(v)] for u, v in m.dimers]}


def covering_from_obj(g, obj) -> DimerCovering:
    try:
        dimers = [(tuple(u), tuple(v)) for u, v in obj["dimers"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise CoveringError("malformed covering object: %s" % exc) from exc
    return validate_covering(g, dimers)
