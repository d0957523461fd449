# core/topology/circle_graph.py
"""
CircleGraph: the circles and lines of a glued diagram (cup diagram under
the number line, cap diagram over it).
Nodes are vertex positions; edges are the arcs of either half.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

import networkx as nx

from core.diagrams.arcs import ArcDiagram, Polarity
from core.diagrams.oriented import is_clockwise
from core.diagrams.weights import Label, Weight
from core.exceptions import StructureError


class Kind(Enum):
    CIRCLE = "circle"
    LINE = "line"


@dataclass(frozen=True, slots=True)
class Component:
    """One connected component; `vertices` ascending."""
    kind: Kind
    vertices: Tuple[int, ...]

    @property
    def leftmost(self) -> int:
        return self.vertices[0]

    def is_anticlockwise(self, weight: Weight) -> bool:
        """Circles only: anticlockwise iff the leftmost vertex carries ∨."""
        if self.kind is not Kind.CIRCLE:
            raise StructureError("Only circles carry a rotation direction")
        return weight.at(self.leftmost) is Label.DOWN


class CircleGraph:
    """
    Connectivity of the glued diagram ab. Each non-free vertex meets its cup
    side arc or ray and its cap side arc or ray.
    """
    def __init__(self, cup: ArcDiagram, cap: ArcDiagram):
        if cup.size != cap.size:
            raise StructureError(f"Halves of different length: {cup.size} and {cap.size}")
        if cup.free_positions != cap.free_positions:
            raise StructureError(
                f"Free vertices differ: {list(cup.free_positions)} and {list(cap.free_positions)}")
        self.cup = cup.as_polarity(Polarity.CUP)
        self.cap = cap.as_polarity(Polarity.CAP)
        self._graph = nx.MultiGraph()
        free = set(cup.free_positions)
        self._graph.add_nodes_from(i for i in range(1, cup.size + 1) if i not in free)
        self._graph.add_edges_from(self.cup.arcs, side="cup")
        self._graph.add_edges_from(self.cap.arcs, side="cap")
        self._components: Optional[List[Component]] = None

    def components(self) -> List[Component]:
        """Components ordered by leftmost vertex."""
        if self._components is not None:
            return self._components
        rays = set(self.cup.rays) | set(self.cap.rays)
        found = []
        for nodes in nx.connected_components(self._graph):
            vertices = tuple(sorted(nodes))
            kind = Kind.LINE if rays.intersection(vertices) else Kind.CIRCLE
            found.append(Component(kind, vertices))
        self._components = sorted(found, key=lambda c: c.leftmost)
        return self._components

    def circles(self) -> List[Component]:
        return [c for c in self.components() if c.kind is Kind.CIRCLE]

    def lines(self) -> List[Component]:
        return [c for c in self.components() if c.kind is Kind.LINE]

    def component_degree(self, component: Component, weight: Weight) -> int:
        """
        Degree carried by one component. A circle with k caps contributes
        k - 1 if anticlockwise and k + 1 if clockwise; a line contributes its
        clockwise arcs.
        """
        members = set(component.vertices)
        if component.kind is Kind.CIRCLE:
            caps = sum(1 for i, _ in self.cap.arcs if i in members)
            return caps - 1 if component.is_anticlockwise(weight) else caps + 1
        arcs = [arc for arc in self.cup.arcs + self.cap.arcs if arc[0] in members]
        return sum(1 for arc in arcs if is_clockwise(arc, weight))

    def __repr__(self) -> str:
        return f"<CircleGraph vertices={self._graph.number_of_nodes()} arcs={self._graph.number_of_edges()}>"


def components(cup: ArcDiagram, cap: ArcDiagram) -> List[Component]:
    return CircleGraph(cup, cap).components()
