"""Local moves on dimer coverings and the t-equivalence relation.

An s-move rotates two parallel dimers around a unit square.  A t-move
slides an impurity: for whites a, c opposite across a black d and a
common diagonal neighbor b, it swaps {a,b}+{c,d} for {b,c}+{a,d}.
Both kinds are involutions on a fixed four-vertex site, which is what
makes a uniform random choice over sites a symmetric proposal kernel.
"""

from dataclasses import dataclass

from .covering import DimerCovering, validate_covering
from .lattice import InvalidInputError, Vertex, edge, is_black, is_white


class InapplicableMoveError(InvalidInputError):
    pass


@dataclass(frozen=True)
class LocalMove:
    """Replace dimers {a,b},{c,d} by {b,c},{d,a}."""

    kind: str  # "s" or "t"
    a: Vertex
    b: Vertex
    c: Vertex
    d: Vertex

    @property
    def removes(self):
        return (edge(self.a, self.b), edge(self.c, self.d))

    @property
    def adds(self):
        return (edge(self.b, self.c), edge(self.d, self.a))

    def reverse(self) -> "LocalMove":
        if self.kind == "s":
            return LocalMove("s", self.b, self.c, self.d, self.a)
        return LocalMove("t", self.c, self.b, self.a, self.d)

    def sort_key(self):
        return (self.kind, tuple(sorted(self.removes)))


def unit_squares(g):
    """All unit squares of g as (bl, br, tr, tl) corner tuples."""
    out = []
    for x, y in g.vertices:
        square = ((x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1))
        if all(v in g.vertex_set for v in square[1:]):
            out.append(square)
    return out


def t_sites(g):
    """All four-vertex t-move sites (a, b, c, d) of g, a < c.

    d is black, b a white unit neighbor of d, and a, c the two unit
    neighbors of d perpendicular to b; {a,b} and {b,c} are then the
    diagonal edges of the site.
    """
    out = []
    for d in g.blacks:
        x, y = d
        for ux, uy in ((1, 0), (0, 1), (-1, 0), (0, -1)):
            b = (x + ux, y + uy)
            if b not in g.vertex_set:
                continue
            a = (x - uy, y + ux)
            c = (x + uy, y - ux)
            if a in g.vertex_set and c in g.vertex_set:
                if c < a:
                    a, c = c, a
                out.append((a, b, c, d))
    return sorted(out)


def find_moves(m: DimerCovering):
    """All moves applicable to m, sorted by (kind, removed edges)."""
    g = m.graph
    out = []
    for bl, br, tr, tl in unit_squares(g):
        if m.mate(bl) == br and m.mate(tl) == tr:
            out.append(LocalMove("s", bl, br, tr, tl))
        elif m.mate(bl) == tl and m.mate(br) == tr:
            out.append(LocalMove("s", br, tr, tl, bl))
    for a, b, c, d in t_sites(g):
        if m.mate(a) == b and m.mate(c) == d:
            out.append(LocalMove("t", a, b, c, d))
        elif m.mate(b) == c and m.mate(a) == d:
            out.append(LocalMove("t", c, b, a, d))
    return sorted(out, key=LocalMove.sort_key)


def apply_move(m: DimerCovering, mv: LocalMove) -> DimerCovering:
    """Apply mv to m, returning a new validated covering."""
    r1, r2 = mv.removes
    dimers = set(m.dimers)
    if r1 not in dimers or r2 not in dimers:
        raise InapplicableMoveError("move removes edges not present in m")
    dimers.remove(r1)
    dimers.remove(r2)
    dimers.update(mv.adds)
    return validate_covering(m.graph, dimers)


def t_class(m: DimerCovering):
    """The full t-equivalence class of m, via breadth-first search."""
    seen = {m}
    frontier = [m]
    while frontier:
        nxt = []
        for cur in frontier:
            for mv in find_moves(cur):
                if mv.kind != "t":
                    continue
                other = apply_move(cur, mv)
                if other not in seen:
                    seen.add(other)
                    nxt.append(other)
        frontier = nxt
    return seen


def t_classes(coverings):
    """Partition coverings into t-equivalence classes."""
    remaining = set(coverings)
    classes = []
    while remaining:
        m = min(remaining, key=lambda c: c.dimers)
        cls = t_class(m)
        if not cls <= remaining:
            raise AssertionError("t-class escapes the supplied covering set")
        remaining -= cls
        classes.append(cls)
    return classes


def move_graph_connected(g, coverings=None) -> bool:
    """Whether s- and t-moves together connect all coverings of g."""
    from .oracle import enumerate_coverings
    if coverings is None:
        coverings = enumerate_coverings(g)
    if not coverings:
        return True
    seen = {coverings[0]}
    frontier = [coverings[0]]
    while frontier:
        nxt = []
        for cur in frontier:
            for mv in find_moves(cur):
                other = apply_move(cur, mv)
                if other not in seen:
                    seen.add(other)
                    nxt.append(other)
        frontier = nxt
    return len(seen) == len(coverings)
