# core/algebra/extension.py
"""
Extension maps ex: K_Γ → K_Λ for Γ ≺ Λ.

Γ's number line sits inside Λ's at some offset; the shared vertices keep
their labels and the new ∨/∧ vertices read ∧...∧∨...∨ from left to right.
Rays of a diagram turn into anticlockwise arcs through the new vertices
wherever possible.
"""
from __future__ import annotations

from typing import List, Optional

from core.diagrams.arcs import cup_diagram_of
from core.diagrams.blocks import Block
from core.diagrams.oriented import BasisDiagram, reorient
from core.diagrams.weights import Label, Weight
from core.exceptions import PreconditionError
from core.surgery.element import Element


def valid_offsets(source: Block, target: Block) -> List[int]:
    """Every offset k at which vertex i of Γ can sit on vertex i + k of Λ."""
    gamma, lam = source.representative, target.representative
    n, N = len(gamma), len(lam)
    extra_down = lam.count(Label.DOWN) - gamma.count(Label.DOWN)
    extra_up = lam.count(Label.UP) - gamma.count(Label.UP)
    if extra_down < 0 or extra_up < 0:
        return []
    found = []
    for k in range(N - n + 1):
        fits = True
        for i, g in enumerate(gamma.labels, start=1):
            t = lam.at(i + k)
            if (g.is_free and t is not g) or (g.is_core and not t.is_core):
                fits = False
                break
        if fits:
            found.append(k)
    return found


class Extension:
    """ex_Γ^Λ at a fixed offset."""

    def __init__(self, source: Block, target: Block, offset: Optional[int] = None):
        offsets = valid_offsets(source, target)
        if not offsets:
            raise PreconditionError(f"The block of '{source}' does not extend to the block of '{target}'")
        if offset is None:
            offset = offsets[0]
        elif offset not in offsets:
            raise PreconditionError(
                f"Offset {offset} does not embed '{source}' into '{target}'; valid offsets are {offsets}")
        self.source = source
        self.target = target
        self.offset = offset
        lam = target.representative
        window = range(offset + 1, offset + len(source.representative) + 1)
        self._new_core = [i for i in lam.core_positions if i not in window]
        extra_up = lam.count(Label.UP) - source.representative.count(Label.UP)
        self._fill = [Label.UP] * extra_up + [Label.DOWN] * (len(self._new_core) - extra_up)

    def __repr__(self) -> str:
        return f"<Extension {self.source} -> {self.target} offset={self.offset}>"

    def weight(self, weight: Weight) -> Weight:
        self.source.require(weight)
        labels = list(self.target.representative.labels)
        for i, lab in enumerate(weight.labels, start=1):
            labels[i - 1 + self.offset] = lab
        for i, lab in zip(self._new_core, self._fill):
            labels[i - 1] = lab
        return Weight(tuple(labels))

    def diagram(self, x: BasisDiagram) -> BasisDiagram:
        cup = cup_diagram_of(self.weight(reorient(x.cup, x.weight)))
        cap = cup_diagram_of(self.weight(reorient(x.cap, x.weight))).mirror()
        return BasisDiagram(cup, self.weight(x.weight), cap)

    def __call__(self, x: Element) -> Element:
        return x.map_basis(self.diagram)


def extend(source: Block, target: Block, x: Element, offset: Optional[int] = None) -> Element:
    """ex_Γ^Λ(x); the smallest valid offset is used unless one is given."""
    return Extension(source, target, offset)(x)
