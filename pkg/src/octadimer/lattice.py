"""Geometry of the dual square-octagon lattice.

The infinite graph Gamma has vertex set Z^2.  A vertex (x, y) is white
when x + y is even and black otherwise.  Unit edges join vertices at
distance one; diagonal edges join two white vertices differing by
(+-1, +-1).  The white vertices split into W0 (both coordinates even)
and W1 (both odd).  W0 carries the spacing-two square lattice Lambda,
W1 its planar dual Lambda-perp, and every diagonal edge joins a W0
vertex to a W1 vertex.

A finite induced subgraph of Gamma is called normal when both the
subgraph and its complement in Gamma are connected.  The number of
diagonal dimers in any perfect matching of a normal graph G is the
invariant (|W_G| - |B_G|) / 2.

The second half of this module builds the one-impurity graphs G of a
region: a polyomino H on Lambda given by its face centers, a
distinguished outer face vertex f* of the dual, and a distinguished
vertex v* of H.  Superimposing H with its full planar dual (one dual
edge per edge of H, boundary edges looping to f*) and inserting a black
vertex on every edge of H yields the balanced bipartite graph N once f*
and v* are dropped; G is the subgraph of Gamma induced by
V(N) + {f*, v*} and every covering of G carries exactly one impurity.
"""

from dataclasses import dataclass


class InvalidInputError(Exception):
    """Input fails a structural precondition."""


class NotConnectedError(InvalidInputError):
    pass


class ComplementNotConnectedError(InvalidInputError):
    """The vertex set has a hole: its complement in Gamma is disconnected."""


class RegionError(InvalidInputError):
    pass


class InvalidFStarError(RegionError):
    pass


class InvalidVStarError(RegionError):
    pass


W0 = "W0"
W1 = "W1"
BLACK = "B"

Vertex = tuple[int, int]
Edge = tuple[Vertex, Vertex]


def classify_vertex(v: Vertex) -> str:
    """Return W0, W1 or B according to the coordinate parities of v."""
    x, y = v
    if (x + y) % 2:
        return BLACK
    return W0 if x % 2 == 0 else W1


def is_white(v: Vertex) -> bool:
    return (v[0] + v[1]) % 2 == 0


def is_black(v: Vertex) -> bool:
    return (v[0] + v[1]) % 2 == 1


UNIT_STEPS = ((1, 0), (0, 1), (-1, 0), (0, -1))
DIAGONAL_STEPS = ((1, 1), (-1, 1), (-1, -1), (1, -1))


def gamma_neighbors(v: Vertex) -> set[Vertex]:
    """Neighbors of v in Gamma: 4 for a black vertex, 8 for a white one."""
    x, y = v
    out = {(x + dx, y + dy) for dx, dy in UNIT_STEPS}
    if is_white(v):
        out |= {(x + dx, y + dy) for dx, dy in DIAGONAL_STEPS}
    return out


def edge(u: Vertex, v: Vertex) -> Edge:
    """Canonical (sorted) form of the edge {u, v}."""
    return (u, v) if u <= v else (v, u)


def is_diagonal_edge(e: Edge) -> bool:
    (x1, y1), (x2, y2) = e
    return abs(x1 - x2) == 1 and abs(y1 - y2) == 1


def is_unit_edge(e: Edge) -> bool:
    (x1, y1), (x2, y2) = e
    return abs(x1 - x2) + abs(y1 - y2) == 1


class NormalGraph:
    """A finite induced subgraph of Gamma, simply connected.

    Vertices and edges are exposed as sorted tuples so that iteration
    order is deterministic everywhere downstream.
    """

    def __init__(self, vertices, edges, adjacency):
        self.vertices = vertices
        self.edges = edges
        self._adjacency = adjacency
        self.vertex_set = frozenset(vertices)
        self.edge_set = frozenset(edges)
        self.whites = tuple(v for v in vertices if is_white(v))
        self.blacks = tuple(v for v in vertices if is_black(v))
        self.white_count = len(self.whites)
        self.black_count = len(self.blacks)

    def neighbors(self, v: Vertex):
        return self._adjacency[v]

    def __contains__(self, v):
        return v in self.vertex_set

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        return "NormalGraph(%d vertices, %d edges)" % (
            len(self.vertices), len(self.edges))


class UnitGraph:
    """A finite graph of unit edges only (the bipartite graph N).

    Unlike a NormalGraph it is not induced in Gamma: the diagonal edges
    between its white vertices are deliberately absent.
    """

    def __init__(self, vertices, edges):
        self.vertices = tuple(sorted(vertices))
        self.edges = tuple(sorted(edges))
        self.vertex_set = frozenset(vertices)
        self.edge_set = frozenset(self.edges)
        adjacency = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adjacency[u].append(v)
            adjacency[v].append(u)
        self._adjacency = {v: tuple(sorted(ns)) for v, ns in adjacency.items()}
        self.whites = tuple(v for v in self.vertices if is_white(v))
        self.blacks = tuple(v for v in self.vertices if is_black(v))
        self.white_count = len(self.whites)
        self.black_count = len(self.blacks)

    def neighbors(self, v: Vertex):
        return self._adjacency[v]

    def __contains__(self, v):
        return v in self.vertex_set

    def __len__(self):
        return len(self.vertices)


def induced_edges(vertex_set) -> list[Edge]:
    out = []
    for v in vertex_set:
        for w in gamma_neighbors(v):
            if w in vertex_set and v < w:
                out.append((v, w))
    return sorted(out)


def _connected(vertices, adjacency) -> bool:
    start = next(iter(vertices))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adjacency[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vertices)


def _complement_connected(vertex_set) -> bool:
    # Flood fill the complement inside the bounding box inflated by one.
    # Any escapable complement vertex reaches the box frame, which is
    # entirely outside the set and connected through the far exterior.
    xs = [x for x, _ in vertex_set]
    ys = [y for _, y in vertex_set]
    x0, x1 = min(xs) - 1, max(xs) + 1
    y0, y1 = min(ys) - 1, max(ys) + 1
    inside = lambda p: x0 <= p[0] <= x1 and y0 <= p[1] <= y1
    seen = set()
    stack = []
    for x in range(x0, x1 + 1):
        for y in (y0, y1):
            stack.append((x, y))
    for y in range(y0, y1 + 1):
        for x in (x0, x1):
            stack.append((x, y))
    stack = [p for p in stack if p not in vertex_set]
    seen.update(stack)
    while stack:
        v = stack.pop()
        for w in gamma_neighbors(v):
            if inside(w) and w not in vertex_set and w not in seen:
                seen.add(w)
                stack.append(w)
    complement = sum(1 for x in range(x0, x1 + 1) for y in range(y0, y1 + 1)
                     if (x, y) not in vertex_set)
    return len(seen) == complement


def build_normal_graph(vertex_set) -> NormalGraph:
    """Build the induced subgraph on vertex_set and verify it is normal."""
    if not vertex_set:
        raise InvalidInputError("empty vertex set")
    vset = frozenset(tuple(v) for v in vertex_set)
    vertices = tuple(sorted(vset))
    edges = tuple(induced_edges(vset))
    adjacency = {v: [] for v in vertices}
    for u, v in edges:
        adjacency[u].append(v)
        adjacency[v].append(u)
    adjacency = {v: tuple(sorted(ns)) for v, ns in adjacency.items()}
    if not _connected(vset, adjacency):
        raise NotConnectedError("vertex set is not connected in Gamma")
    if not _complement_connected(vset):
        raise ComplementNotConnectedError("vertex set encloses a hole")
    return NormalGraph(vertices, edges, adjacency)


def diagonal_edges(g: NormalGraph) -> tuple[Edge, ...]:
    """All diagonal edges of g, in sorted order."""
    return tuple(e for e in g.edges if is_diagonal_edge(e))


@dataclass(frozen=True)
class Region:
    """A polyomino on Lambda given by face centers, plus f* and v*.

    faces are W1 points (odd, odd) at the centers of the unit faces of
    H; f_star is the W1 vertex adjoined to the dual; v_star is the
    vertex of H removed together with f* when forming N.
    """

    faces: tuple[Vertex, ...]
    f_star: Vertex
    v_star: Vertex

    @staticmethod
    def of(faces, f_star, v_star) -> "Region":
        return Region(tuple(sorted(tuple(f) for f in faces)),
                      tuple(f_star), tuple(v_star))


def _face_corners(f: Vertex):
    x, y = f
    return ((x - 1, y - 1), (x + 1, y - 1), (x - 1, y + 1), (x + 1, y + 1))


def _face_sides(f: Vertex):
    x, y = f
    return (edge((x - 1, y - 1), (x + 1, y - 1)),
            edge((x - 1, y + 1), (x + 1, y + 1)),
            edge((x - 1, y - 1), (x - 1, y + 1)),
            edge((x + 1, y - 1), (x + 1, y + 1)))


def _flanking_faces(h_edge: Edge):
    """The two W1 points on either side of an edge of Lambda."""
    (x1, y1), (x2, y2) = h_edge
    if y1 == y2:
        mx = (x1 + x2) // 2
        return ((mx, y1 - 1), (mx, y1 + 1))
    my = (y1 + y2) // 2
    return ((x1 - 1, my), (x1 + 1, my))


def midpoint(e: Edge) -> Vertex:
    (x1, y1), (x2, y2) = e
    return ((x1 + x2) // 2, (y1 + y2) // 2)


def flanking_blacks(diag: Edge):
    """The two black vertices adjacent to both ends of a diagonal edge."""
    (x1, y1), (x2, y2) = diag
    return ((x1, y2), (x2, y1))


def _w1_set_connected(points) -> bool:
    pts = set(points)
    start = next(iter(pts))
    seen = {start}
    stack = [start]
    while stack:
        x, y = stack.pop()
        for dx, dy in ((2, 0), (-2, 0), (0, 2), (0, -2)):
            w = (x + dx, y + dy)
            if w in pts and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(pts)


def _w1_set_has_hole(points) -> bool:
    # Flood fill of the complement on the spacing-two face lattice.
    pts = set(points)
    xs = [x for x, _ in pts]
    ys = [y for _, y in pts]
    x0, x1 = min(xs) - 2, max(xs) + 2
    y0, y1 = min(ys) - 2, max(ys) + 2
    total = 0
    frame = []
    for x in range(x0, x1 + 1, 2):
        for y in range(y0, y1 + 1, 2):
            if (x, y) not in pts:
                total += 1
                if x in (x0, x1) or y in (y0, y1):
                    frame.append((x, y))
    seen = set(frame)
    stack = list(frame)
    while stack:
        x, y = stack.pop()
        for dx, dy in ((2, 0), (-2, 0), (0, 2), (0, -2)):
            w = (x + dx, y + dy)
            if (x0 <= w[0] <= x1 and y0 <= w[1] <= y1
                    and w not in pts and w not in seen):
                seen.add(w)
                stack.append(w)
    return len(seen) != total


class DualGraph:
    """The full planar dual of H, one dual edge per edge of H.

    Vertices are the face centers plus f*.  An interior edge of H
    yields a dual edge between the two incident faces; a boundary edge
    yields a dual edge between its unique incident face and f*.  The
    d* dual edges realized by actual Lambda-perp steps from f* are the
    l-edges.  Dual edges are keyed by the crossed edge of H, so
    parallel f* edges stay distinct.
    """

    def __init__(self, faces, f_star, dual_edges, l_edges):
        self.faces = tuple(sorted(faces))
        self.f_star = f_star
        self.vertices = self.faces + (f_star,)
        self.dual_edges = tuple(sorted(dual_edges))  # (u, v, h_edge)
        self.l_edges = frozenset(l_edges)            # crossed h_edges
        self.d_star = len(l_edges)
        adjacency = {v: set() for v in self.vertices}
        for u, v, _ in self.dual_edges:
            adjacency[u].add(v)
            adjacency[v].add(u)
        self._adjacency = {v: tuple(sorted(ns)) for v, ns in adjacency.items()}

    def neighbors(self, v: Vertex):
        return self._adjacency[v]

    def lattice_adjacent(self, u: Vertex, v: Vertex) -> bool:
        dx, dy = abs(u[0] - v[0]), abs(u[1] - v[1])
        return (dx, dy) in ((2, 0), (0, 2))


class TemperleyTriple:
    """H, its full dual, the balanced bipartite graph N, and G."""

    def __init__(self, region, h_vertices, h_edges, h_perp, n_graph, g,
                 e_star1, e_star2):
        self.region = region
        self.h_vertices = h_vertices
        self.h_edges = h_edges
        self.h_perp = h_perp
        self.n = n_graph
        self.g = g
        self.e_star1 = e_star1
        self.e_star2 = e_star2
        self.f_star = region.f_star
        self.v_star = region.v_star
        self.black_of_h_edge = {e: midpoint(e) for e in h_edges}
        self.h_edge_of_black = {midpoint(e): e for e in h_edges}


def build_region(region: Region) -> TemperleyTriple:
    """Construct H, the full dual, N and G from a validated Region."""
    faces = tuple(sorted(set(tuple(f) for f in region.faces)))
    if not faces:
        raise RegionError("region has no faces")
    if len(faces) != len(region.faces):
        raise RegionError("duplicate faces")
    for f in faces:
        if classify_vertex(f) != W1:
            raise RegionError("face center %r is not an odd-odd point" % (f,))
    if not _w1_set_connected(faces):
        raise RegionError("faces are not connected")
    if _w1_set_has_hole(faces):
        raise RegionError("faces enclose a hole")

    f_star = tuple(region.f_star)
    if classify_vertex(f_star) != W1:
        raise InvalidFStarError("f* must be an odd-odd point")
    if f_star in faces:
        raise InvalidFStarError("f* lies inside the region")
    if _w1_set_has_hole(faces + (f_star,)):
        raise InvalidFStarError("f* pinches off a hole")

    h_vertices = frozenset(c for f in faces for c in _face_corners(f))
    h_edges = frozenset(s for f in faces for s in _face_sides(f))

    face_set = frozenset(faces)
    dual_edges = []
    l_edges = []
    for e in h_edges:
        p, q = _flanking_faces(e)
        inside = [f for f in (p, q) if f in face_set]
        if len(inside) == 2:
            dual_edges.append((min(inside), max(inside), e))
        else:
            outer = p if q in face_set else q
            dual_edges.append((inside[0], f_star, e))
            if outer == f_star:
                l_edges.append(e)
    if not 1 <= len(l_edges) <= 3:
        raise InvalidFStarError(
            "f* must touch the region through 1 to 3 dual lattice edges, "
            "got %d" % len(l_edges))
    h_perp = DualGraph(faces, f_star, dual_edges, l_edges)

    v_star = tuple(region.v_star)
    if v_star not in h_vertices:
        raise InvalidVStarError("v* is not a vertex of H")
    if edge(v_star, f_star) not in {edge(f_star, c)
                                    for c in _face_corners(f_star)}:
        raise InvalidVStarError("v* is not diagonally adjacent to f*")

    blacks = frozenset(midpoint(e) for e in h_edges)
    g_vertices = h_vertices | face_set | {f_star} | blacks

    # The two diagonal edges at f* with a flanking black outside G are
    # the only boundary diagonals of G; e*1 = {f*, v*} must be one of
    # them or the impurity cannot always be driven onto it.
    boundary = []
    for c in _face_corners(f_star):
        if c not in h_vertices:
            continue
        d = edge(f_star, c)
        if any(b not in g_vertices for b in flanking_blacks(d)):
            boundary.append(d)
    if len(boundary) != 2:
        raise InvalidFStarError(
            "expected exactly 2 boundary diagonals at f*, got %d"
            % len(boundary))
    e_star1 = edge(f_star, v_star)
    if e_star1 not in boundary:
        raise InvalidVStarError(
            "{f*, v*} is an interior diagonal; v* must sit on the "
            "boundary of G")
    e_star2 = boundary[0] if boundary[1] == e_star1 else boundary[1]

    g = build_normal_graph(g_vertices)

    n_vertices = g_vertices - {f_star, v_star}
    n_edges = [e for e in g.edges
               if is_unit_edge(e)
               and e[0] in n_vertices and e[1] in n_vertices]
    n_graph = UnitGraph(n_vertices, n_edges)
    if n_graph.white_count != n_graph.black_count:
        raise RegionError("N is not balanced; region construction is broken")

    return TemperleyTriple(Region.of(faces, f_star, v_star),
                           h_vertices, h_edges, h_perp, n_graph, g,
                           e_star1, e_star2)


def strip_region(n: int) -> Region:
    """A 1 x n row of faces with f* at the right end and v* above it."""
    if n < 1:
        raise RegionError("strip length must be positive")
    faces = [(2 * j - 1, 1) for j in range(1, n + 1)]
    return Region.of(faces, (2 * n + 1, 1), (2 * n, 2))


def ell_region() -> Region:
    """The three-face L-shaped region used throughout the test suite."""
    return Region.of([(1, 1), (3, 1), (1, 3)], (3, 3), (2, 4))
