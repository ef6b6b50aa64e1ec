"""Deterministic SVG output."""

import xml.etree.ElementTree as ET

from octadimer.render import render_covering
from octadimer.slits import forests, slit_curves
from octadimer.temperley import initial_covering

SVG = "{http://www.w3.org/2000/svg}"


def test_byte_deterministic(ell):
    m = initial_covering(ell)
    assert render_covering(m, show_slits=True, show_forests=True) == \
        render_covering(m, show_slits=True, show_forests=True)


def test_parses_and_counts(ell):
    m = initial_covering(ell)
    root = ET.fromstring(render_covering(m))
    assert root.tag == SVG + "svg"
    assert root.get("viewBox") == "0 0 240 240"
    circles = root.findall(".//" + SVG + "circle")
    assert len(circles) == len(ell.g.vertices)
    lines = root.findall(".//" + SVG + "line")
    # one grey line per edge plus one heavy line per dimer
    assert len(lines) == len(ell.g.edges) + len(m.dimers)
    assert not root.findall(".//" + SVG + "polyline")


def test_slit_layer(ell):
    m = initial_covering(ell)
    root = ET.fromstring(render_covering(m, show_slits=True))
    polylines = root.findall(".//" + SVG + "polyline")
    assert len(polylines) == len(slit_curves(m))


def test_forest_layer(ell):
    m = initial_covering(ell)
    fp = forests(m)
    base = ET.fromstring(render_covering(m))
    with_forests = ET.fromstring(render_covering(m, show_forests=True))
    extra = (len(with_forests.findall(".//" + SVG + "line"))
             - len(base.findall(".//" + SVG + "line")))
    assert extra == sum(len(t.edges) for t in fp.primary + fp.dual)


def test_distinct_configurations_render_differently(ell, ell_coverings):
    a = render_covering(ell_coverings[0])
    b = render_covering(ell_coverings[1])
    assert a != b
