import pytest

from core.algebra.diagram_algebra import basis_K
from core.diagrams.arcs import ArcDiagram, Polarity
from core.diagrams.blocks import iter_blocks
from core.diagrams.oriented import BasisDiagram
from core.diagrams.weights import Weight
from core.exceptions import StructureError
from core.topology.circle_graph import CircleGraph, Kind, components


def test_single_line_through_three_vertices():
    cup = ArcDiagram(3, [(1, 2)], [3])
    cap = ArcDiagram(3, [(2, 3)], [1], Polarity.CAP)
    found = components(cup, cap)
    assert len(found) == 1
    assert found[0].kind is Kind.LINE
    assert found[0].vertices == (1, 2, 3)


def test_nested_circles():
    x = BasisDiagram.parse("(1,4);(2,3)|v^v^|(1,2);(3,4)")
    graph = CircleGraph(x.cup, x.cap)
    assert [c.kind for c in graph.components()] == [Kind.CIRCLE]
    assert graph.lines() == []


def test_circle_direction():
    x = BasisDiagram.parse("(1,2)|^v|(1,2)")
    circle = CircleGraph(x.cup, x.cap).circles()[0]
    assert not circle.is_anticlockwise(x.weight)
    assert CircleGraph(x.cup, x.cap).component_degree(circle, x.weight) == 2


def test_lines_have_no_direction():
    x = BasisDiagram.parse("(1,2)|^v|")
    line = CircleGraph(x.cup, x.cap).lines()[0]
    with pytest.raises(StructureError):
        line.is_anticlockwise(x.weight)


def test_free_positions_must_agree():
    with pytest.raises(StructureError):
        CircleGraph(ArcDiagram(2, [], [1]), ArcDiagram(2, [], [2], Polarity.CAP))


def test_component_degrees_sum_to_diagram_degree():
    for block in iter_blocks(4):
        for x in basis_K(block):
            graph = CircleGraph(x.cup, x.cap)
            assert sum(graph.component_degree(c, x.weight) for c in graph.components()) == x.degree


def test_free_vertices_belong_to_no_component():
    x = BasisDiagram.idempotent(Weight.parse("vo^"))
    found = components(x.cup, x.cap)
    assert [c.vertices for c in found] == [(1, 3)]
