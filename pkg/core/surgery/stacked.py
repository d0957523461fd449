# core/surgery/stacked.py
"""
StackedDiagram: the product picture (a λ b)(c μ d) with b* = c, drawn as two
number lines. The lower line carries λ and the cup diagram a; the upper line
carries μ and the cap diagram d. Between them sit the still uncut
cap/cup pairs of b and c, and vertical segments where rays were stitched or
surgery has already happened.

Nodes are `(level, position)` with level 0 for the lower line and 1 for the
upper. Every non-free node has a DOWN side and an UP side, each leading to
another node or to a ray.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Dict, FrozenSet, List, Optional, Tuple

import networkx as nx

from core.diagrams.arcs import Arc, ArcDiagram
from core.diagrams.oriented import BasisDiagram
from core.diagrams.weights import Label, Weight
from core.exceptions import ContractViolation

Node = Tuple[int, int]
LOWER, UPPER = 0, 1


class Side(Enum):
    DOWN = 0
    UP = 1

    def opposite(self) -> Side:
        return Side.UP if self is Side.DOWN else Side.DOWN


class CircleType(Enum):
    ONE = "1"      # anticlockwise circle
    X = "x"        # clockwise circle
    LINE = "y"


def _leaving(label: Label) -> Side:
    return Side.UP if label is Label.UP else Side.DOWN


@dataclass(frozen=True)
class StackedDiagram:
    bottom: ArcDiagram
    lower: Tuple[Label, ...]
    middle: Tuple[Arc, ...]
    verticals: FrozenSet[int]
    upper: Tuple[Label, ...]
    top: ArcDiagram

    @classmethod
    def stack(cls, x: BasisDiagram, y: BasisDiagram) -> StackedDiagram:
        """Put y on top of x and stitch matching rays; needs cap(x)* = cup(y)."""
        if x.cap.mirror() != y.cup:
            raise ContractViolation(f"Cannot stack '{x}' under '{y}': cap(x)* differs from cup(y)")
        for r in x.cap.rays:
            if x.weight.at(r) is not y.weight.at(r):
                raise ContractViolation(
                    f"Stitched rays at vertex {r} carry different labels in '{x}' and '{y}'")
        return cls(x.cup, x.weight.labels, x.cap.arcs, frozenset(x.cap.rays),
                   y.weight.labels, y.cap)

    # ------------------------------------------------------------------
    # Incidence
    # ------------------------------------------------------------------
    @cached_property
    def _middle_partner(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for i, j in self.middle:
            out[i] = j
            out[j] = i
        return out

    def neighbour(self, node: Node, side: Side) -> Optional[Tuple[Node, Side]]:
        """Where the curve goes when it leaves `node` through `side`; None at a ray."""
        level, i = node
        outer = self.bottom if level == LOWER else self.top
        if (level == LOWER) == (side is Side.DOWN):
            p = outer.partner(i)
            return ((level, p), side) if p is not None else None
        if i in self.verticals:
            return (1 - level, i), side.opposite()
        p = self._middle_partner.get(i)
        if p is None:
            raise ContractViolation(f"Vertex {i} on level {level} has no middle connection")
        return (level, p), side

    def label(self, node: Node) -> Label:
        level, i = node
        return (self.lower if level == LOWER else self.upper)[i - 1]

    @cached_property
    def nodes(self) -> Tuple[Node, ...]:
        core = [i for i, lab in enumerate(self.lower, start=1) if lab.is_core]
        return tuple((level, i) for level in (LOWER, UPPER) for i in core)

    def _graph_on(self, nodes) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(nodes)
        for node in nodes:
            for side in Side:
                nxt = self.neighbour(node, side)
                if nxt is not None:
                    g.add_edge(node, nxt[0])
        return g

    @cached_property
    def graph(self) -> nx.Graph:
        return self._graph_on(self.nodes)

    @cached_property
    def _component_index(self) -> Dict[Node, FrozenSet[Node]]:
        index: Dict[Node, FrozenSet[Node]] = {}
        for comp in nx.connected_components(self.graph):
            frozen = frozenset(comp)
            for node in comp:
                index[node] = frozen
        return index

    def _with_components(self, index: Dict[Node, FrozenSet[Node]]) -> StackedDiagram:
        object.__setattr__(self, "_component_index", index)
        return self

    def component_of(self, node: Node) -> FrozenSet[Node]:
        return self._component_index[node]

    def ray_ends(self, component: FrozenSet[Node]) -> List[Tuple[Node, Side]]:
        return sorted((node, side) for node in component for side in Side
                      if self.neighbour(node, side) is None)

    def circle_type(self, component: FrozenSet[Node]) -> CircleType:
        if self.ray_ends(component):
            return CircleType.LINE
        start = min(component, key=lambda n: (n[1], n[0]))
        return CircleType.ONE if self.label(start) is Label.DOWN else CircleType.X

    # ------------------------------------------------------------------
    # Orientation
    # ------------------------------------------------------------------
    def _walk(self, start: Node, label: Label) -> Dict[Node, Label]:
        out = {start: label}
        node, leave = start, _leaving(label)
        while True:
            nxt = self.neighbour(node, leave)
            if nxt is None:
                break
            node, arrive = nxt
            if node == start:
                break
            lab = Label.UP if arrive is Side.DOWN else Label.DOWN
            out[node] = lab
            leave = arrive.opposite()
        return out

    def orient_from(self, start: Node, label: Label) -> Dict[Node, Label]:
        """Labels along the component of `start` once `start` carries `label`."""
        if self.neighbour(start, _leaving(label)) is None:
            # the curve enters through the ray here; trace it backwards
            return {n: lab.flipped() for n, lab in self._walk(start, label.flipped()).items()}
        return self._walk(start, label)

    def orient_circle(self, component: FrozenSet[Node], kind: CircleType) -> Dict[Node, Label]:
        start = min(component, key=lambda n: (n[1], n[0]))
        return self.orient_from(start, Label.DOWN if kind is CircleType.ONE else Label.UP)

    def orient_line(self, component: FrozenSet[Node]) -> Dict[Node, Label]:
        """Re-derive a line's labels from its first ray end; the other end must agree."""
        ends = self.ray_ends(component)
        start = ends[0][0]
        labels = self.orient_from(start, self.label(start))
        for node, _ in ends[1:]:
            if labels[node] is not self.label(node):
                raise ContractViolation(f"Line through {sorted(component)} cannot keep its ray labels")
        return labels

    # ------------------------------------------------------------------
    # Rewriting
    # ------------------------------------------------------------------
    def cut(self, pair: Arc) -> StackedDiagram:
        """Replace the middle cap/cup pair by two vertical segments, labels untouched."""
        if pair not in self.middle:
            raise ContractViolation(f"{pair} is not a middle cup/cap pair of this diagram")
        out = StackedDiagram(self.bottom, self.lower,
                             tuple(p for p in self.middle if p != pair),
                             self.verticals | set(pair), self.upper, self.top)
        # only the components through the cut pair change: two merge, or one splits
        i = pair[0]
        low, up = self.component_of((LOWER, i)), self.component_of((UPPER, i))
        index = dict(self._component_index)
        parts = [low | up] if low != up else nx.connected_components(out._graph_on(low))
        for part in parts:
            frozen = frozenset(part)
            for node in frozen:
                index[node] = frozen
        return out._with_components(index)

    def relabelled(self, labels: Dict[Node, Label]) -> StackedDiagram:
        lower, upper = list(self.lower), list(self.upper)
        for (level, i), lab in labels.items():
            (lower if level == LOWER else upper)[i - 1] = lab
        out = StackedDiagram(self.bottom, tuple(lower), self.middle, self.verticals,
                             tuple(upper), self.top)
        return out._with_components(self._component_index)

    def collapse(self) -> BasisDiagram:
        """Identify the two number lines once no middle pairs are left."""
        if self.middle:
            raise ContractViolation("Cannot collapse while middle pairs remain")
        if self.lower != self.upper:
            raise ContractViolation("Number lines disagree after surgery")
        return BasisDiagram(self.bottom, Weight(self.lower), self.top)
