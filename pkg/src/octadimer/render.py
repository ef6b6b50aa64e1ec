"""Deterministic SVG pictures of coverings, slit-curves and forests.

All geometry lives on the doubled integer grid (a lattice point (x, y)
sits at (2x, 2y), edge midpoints at odd sums), scaled by a fixed pixel
factor, so output bytes depend only on the input covering.  Slit
curves are drawn as polylines through their midpoint chains rather
than as circular arcs; the combinatorics, not the curvature, is what
the pictures are for.  Primary forest trees are solid, dual trees
dashed, matching the usual figure convention.
"""

from .covering import DimerCovering
from .lattice import is_diagonal_edge
from .slits import forests, slit_curves

PX = 20          # pixels per half lattice unit
PAD = 2          # halves of padding around the bounding box

DIMER_STYLE = 'stroke="#1f77b4" stroke-width="7" stroke-linecap="round"'
IMPURITY_STYLE = 'stroke="#d62728" stroke-width="7" stroke-linecap="round"'
EDGE_STYLE = 'stroke="#bbbbbb" stroke-width="1"'
SLIT_STYLE = ('stroke="#e41a1c" stroke-width="3" fill="none" '
              'stroke-linejoin="round" stroke-linecap="round"')
PRIMARY_STYLE = 'stroke="#000000" stroke-width="4" stroke-linecap="round"'
DUAL_STYLE = ('stroke="#000000" stroke-width="4" stroke-linecap="round" '
              'stroke-dasharray="8,6"')


class _Frame:
    def __init__(self, vertices):
        xs = [2 * x for x, _ in vertices]
        ys = [2 * y for _, y in vertices]
        self.x0 = min(xs) - PAD
        self.y1 = max(ys) + PAD
        self.width = (max(xs) + PAD - self.x0) * PX
        self.height = (self.y1 - (min(ys) - PAD)) * PX

    def at(self, doubled):
        # SVG y axis points down.
        return ((doubled[0] - self.x0) * PX, (self.y1 - doubled[1]) * PX)

    def vertex(self, v):
        return self.at((2 * v[0], 2 * v[1]))


def _line(frame, u, v, style):
    (x1, y1), (x2, y2) = frame.vertex(u), frame.vertex(v)
    return '<line x1="%d" y1="%d" x2="%d" y2="%d" %s/>' % (
        x1, y1, x2, y2, style)


def render_covering(m: DimerCovering, show_slits=False,
                    show_forests=False) -> str:
    """An SVG 1.1 document for the covering, stable byte for byte."""
    g = m.graph
    frame = _Frame(g.vertices)
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        'viewBox="0 0 %d %d">' % (frame.width, frame.height),
    ]
    for e in g.edges:
        parts.append(_line(frame, e[0], e[1], EDGE_STYLE))
    for e in m.dimers:
        style = IMPURITY_STYLE if is_diagonal_edge(e) else DIMER_STYLE
        parts.append(_line(frame, e[0], e[1], style))
    if show_forests:
        fp = forests(m)
        for trees, style in ((fp.primary, PRIMARY_STYLE),
                             (fp.dual, DUAL_STYLE)):
            for tree in trees:
                for e in sorted(tree.edges):
                    parts.append(_line(frame, e[0], e[1], style))
    if show_slits:
        for c in sorted(slit_curves(m), key=lambda c: c.points):
            pts = " ".join("%d,%d" % frame.at(p) for p in c.points)
            parts.append('<polyline points="%s" %s/>' % (pts, SLIT_STYLE))
    for v in g.vertices:
        x, y = frame.vertex(v)
        if (v[0] + v[1]) % 2:
            parts.append(
                '<circle cx="%d" cy="%d" r="5" fill="#000000"/>' % (x, y))
        else:
            parts.append(
                '<circle cx="%d" cy="%d" r="6" fill="#ffffff" '
                'stroke="#000000" stroke-width="2"/>' % (x, y))
    parts.append('</svg>')
    return "\n".join(parts) + "\n"
