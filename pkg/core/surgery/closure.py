# core/surgery/closure.py
"""
Closure of a block into a Khovanov block and the quotient product built on it.

For a block Λ with p ∧'s and q ∨'s, cl(λ) puts p new ∨'s on the left and q
new ∧'s on the right. Closed diagrams of the closed block whose weight is
not of that form span the ideal; the product of K_Λ is the product of
closures with those terms dropped.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Dict, Optional

from core.diagrams.arcs import ArcDiagram, cup_diagram_of
from core.diagrams.blocks import Block
from core.diagrams.oriented import BasisDiagram, reorient
from core.diagrams.weights import Label, Weight
from core.exceptions import PreconditionError
from core.surgery.element import Element
from core.surgery.engine import check_same_block, multiply_closed


class ClosureMap:
    """cl and its inverse for one block."""

    def __init__(self, block: Block):
        self.block = block
        rep = block.representative
        self.left = rep.count(Label.UP)     # p new ∨'s
        self.right = rep.count(Label.DOWN)  # q new ∧'s
        self.size = block.size
        self._closed: Dict[BasisDiagram, BasisDiagram] = {}
        self._opened: Dict[BasisDiagram, BasisDiagram] = {}

    def __repr__(self) -> str:
        return f"<ClosureMap block={self.block} p={self.left} q={self.right}>"

    def close_weight(self, weight: Weight) -> Weight:
        self.block.require(weight)
        return Weight((Label.DOWN,) * self.left + weight.labels + (Label.UP,) * self.right)

    def in_image(self, weight: Weight) -> bool:
        """Whether a weight of the closed block lies in cl(Λ)."""
        n = len(weight)
        if n != self.left + self.size + self.right:
            return False
        head = weight.labels[:self.left]
        tail = weight.labels[n - self.right:]
        return all(l is Label.DOWN for l in head) and all(l is Label.UP for l in tail)

    def close_half(self, diagram: ArcDiagram, weight: Weight) -> ArcDiagram:
        """cl(a) for an oriented (a, λ), or cl(b) for an oriented (λ, b)."""
        closed = cup_diagram_of(self.close_weight(reorient(diagram, weight)))
        return closed.as_polarity(diagram.polarity)

    def close(self, x: BasisDiagram) -> BasisDiagram:
        if x not in self._closed:
            self._closed[x] = BasisDiagram(self.close_half(x.cup, x.weight),
                                           self.close_weight(x.weight),
                                           self.close_half(x.cap, x.weight))
        return self._closed[x]

    def open_half(self, diagram: ArcDiagram) -> ArcDiagram:
        lo, hi = self.left + 1, self.left + self.size
        arcs, rays = [], []
        for i, j in diagram.arcs:
            inside_i, inside_j = lo <= i <= hi, lo <= j <= hi
            if inside_i and inside_j:
                arcs.append((i - self.left, j - self.left))
            elif inside_i:
                rays.append(i - self.left)
            elif inside_j:
                rays.append(j - self.left)
        rays.extend(r - self.left for r in diagram.rays if lo <= r <= hi)
        return ArcDiagram(self.size, arcs, rays, diagram.polarity)

    def open(self, x: BasisDiagram) -> BasisDiagram:
        """Inverse of `close`; diagrams outside the image represent ideal elements."""
        if not self.in_image(x.weight):
            raise PreconditionError(f"'{x}' lies outside the closure of the block of '{self.block}'")
        if x not in self._opened:
            labels = x.weight.labels[self.left:self.left + self.size]
            self._opened[x] = BasisDiagram(self.open_half(x.cup), Weight(labels), self.open_half(x.cap))
        return self._opened[x]


@lru_cache(maxsize=4096)
def closure_map(block: Block) -> ClosureMap:
    """The shared ClosureMap of a block."""
    return ClosureMap(block)


def closure(x: BasisDiagram, block: Block) -> BasisDiagram:
    return closure_map(block).close(x)


def open_diagram(x: BasisDiagram, block: Block) -> BasisDiagram:
    return closure_map(block).open(x)


def multiply_via_closure(x: BasisDiagram, y: BasisDiagram, trace: Optional[Counter] = None) -> Element:
    """Multiply the closures, drop terms in the ideal, open the rest."""
    check_same_block(x, y)
    cmap = closure_map(Block.of(x.weight))
    product = multiply_closed(cmap.close(x), cmap.close(y), trace=trace)
    return Element((cmap.open(z), c) for z, c in product if cmap.in_image(z.weight))
