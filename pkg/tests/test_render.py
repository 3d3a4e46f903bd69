import re
import xml.etree.ElementTree as ET

import pytest
from hypothesis import given

from rbkit.diagrams import Diagram, generator
from rbkit.render import ARC_DEPTH, GAP, render, render_ascii, render_svg

from conftest import diagrams_of

SVG = "{http://www.w3.org/2000/svg}"


def svg_edges(text):
    root = ET.fromstring(text)
    return {tuple(p.get("data-edge").split()) for p in root.iter(f"{SVG}path")}


def test_identity_ascii():
    lines = render_ascii(Diagram.identity(3)).splitlines()
    assert lines[0] == "o o o" and lines[-1] == "o o o"
    assert all(line == "| | |" for line in lines[1:-1])


def test_t1_ascii_has_cup_and_cap():
    lines = render_ascii(generator("t", 1, 2)).splitlines()
    assert lines[1] == "+-+" and lines[-2] == "+-+"


def test_isolated_vertices_marked():
    lines = render_ascii(generator("p", 2, 2)).splitlines()
    assert lines[0] == "o ." and lines[-1] == "o ."


def test_example4_svg_edge_set(example4_path):
    d = Diagram.from_json(example4_path.read_text())
    assert svg_edges(render_svg(d)) == {tuple(e) for e in d.named_edges()}
    assert svg_edges(render_svg(d)) == {("t1", "b3"), ("t2", "t4"), ("t3", "b1"),
                                        ("t5", "b4"), ("b5", "b6")}


def test_svg_arc_control_offset():
    text = render_svg(generator("t", 1, 2))
    depth = ARC_DEPTH * GAP
    cups = re.findall(r'd="M (\S+) (\S+) C (\S+) (\S+)', text)
    offsets = [abs(float(cy) - float(y)) for _, y, _, cy in cups]
    assert len(offsets) == 2
    assert offsets == pytest.approx([depth, depth])


@given(diagrams_of(max_k=4))
def test_svg_edges_match_any_diagram(d):
    text = render_svg(d)
    assert svg_edges(text) == {tuple(e) for e in d.named_edges()}
    assert text.count("<circle") == 2 * d.k


@given(diagrams_of(max_k=4))
def test_rendering_is_deterministic(d):
    assert render(d, "ascii") == render(d, "ascii")
    assert render(d, "svg") == render(d, "svg")


def test_unknown_format():
    with pytest.raises(ValueError):
        render(Diagram.identity(1), "png")
