# core/diagrams/oriented.py
"""
Oriented cup/cap diagrams, degrees and the basis diagrams (aλb).
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Tuple

from core.diagrams.arcs import ArcDiagram, Polarity, cap_diagram_of, cup_diagram_of
from core.diagrams.weights import Label, Weight
from core.exceptions import ParseError, StructureError
from core.validation import validate_free_positions


def is_oriented(diagram: ArcDiagram, weight: Weight) -> bool:
    """
    (a, λ) is oriented iff free vertices carry ∘/×, every arc joins one ∨
    and one ∧, rays carry ∨/∧, and no ∨-ray sits left of an ∧-ray.
    A cap diagram is checked through its mirror image; the conditions are the same.
    """
    if diagram.size != len(weight):
        return False
    free = set(diagram.free_positions)
    for i, lab in enumerate(weight.labels, start=1):
        if (i in free) != lab.is_free:
            return False
    for i, j in diagram.arcs:
        if {weight.at(i), weight.at(j)} != {Label.DOWN, Label.UP}:
            return False
    seen_down_ray = False
    for r in diagram.rays:
        if weight.at(r) is Label.DOWN:
            seen_down_ray = True
        elif seen_down_ray:
            return False
    return True


def is_clockwise(arc: Tuple[int, int], weight: Weight) -> bool:
    """An oriented cup or cap is clockwise iff its left end is ∧."""
    return weight.at(arc[0]) is Label.UP


def half_degree(diagram: ArcDiagram, weight: Weight) -> int:
    """Number of clockwise arcs of an oriented half-diagram."""
    return sum(1 for arc in diagram.arcs if is_clockwise(arc, weight))


def reorient(diagram: ArcDiagram, weight: Weight) -> Weight:
    """
    The unique α with α̲ = a (or ᾱ = b for caps) and α ⊂ λ: every clockwise
    arc is turned anticlockwise, rays keep their labels.
    """
    changes = {}
    for i, j in diagram.arcs:
        changes[i] = Label.DOWN
        changes[j] = Label.UP
    return weight.with_labels(changes)


def subset_rel(mu: Weight, lam: Weight) -> bool:
    """μ ⊂ λ: μ ~ λ and (μ̲, λ) is oriented."""
    mu.check_length(lam)
    return mu.equivalent(lam) and is_oriented(cup_diagram_of(mu), lam)


def defect(weight: Weight) -> int:
    """Number of cups of λ̲."""
    return len(cup_diagram_of(weight).arcs)


# ----------------------------------------------------------------------
# Basis diagrams
# ----------------------------------------------------------------------
_DIAGRAM_RE = re.compile(r"^\s*([^|]*)\|([^|]*)\|([^|]*)\s*$")


@dataclass(frozen=True, slots=True)
class BasisDiagram:
    """An oriented circle diagram (aλb); `cup` is a, `cap` is b."""
    cup: ArcDiagram
    weight: Weight
    cap: ArcDiagram
    degree: int = field(default=0, compare=False)

    def __init__(self, cup: ArcDiagram, weight: Weight, cap: ArcDiagram):
        n = len(weight)
        if cup.size != n or cap.size != n:
            raise StructureError(
                f"Diagram parts have lengths {cup.size}, {n}, {cap.size}")
        cup = cup.as_polarity(Polarity.CUP)
        cap = cap.as_polarity(Polarity.CAP)
        free = tuple(i for i, lab in enumerate(weight.labels, start=1) if lab.is_free)
        validate_free_positions(n, cup.free_positions, free, "cup diagram")
        validate_free_positions(n, cap.free_positions, free, "cap diagram")
        if not is_oriented(cup, weight):
            raise StructureError(f"Cup diagram '{cup}' is not oriented by '{weight}'")
        if not is_oriented(cap, weight):
            raise StructureError(f"Cap diagram '{cap}' is not oriented by '{weight}'")
        object.__setattr__(self, "cup", cup)
        object.__setattr__(self, "weight", weight)
        object.__setattr__(self, "cap", cap)
        object.__setattr__(self, "degree", half_degree(cup, weight) + half_degree(cap, weight))

    @classmethod
    def parse(cls, text: str) -> BasisDiagram:
        m = _DIAGRAM_RE.match(text)
        if not m:
            raise ParseError(f"Expected 'cups|weight|caps', got '{text}'")
        weight = Weight.parse(m.group(2).strip())
        return cls(ArcDiagram.parse(m.group(1), weight, Polarity.CUP),
                   weight,
                   ArcDiagram.parse(m.group(3), weight, Polarity.CAP))

    @classmethod
    def idempotent(cls, weight: Weight) -> BasisDiagram:
        """e_λ = (λ̲ λ λ̄)."""
        return cls(cup_diagram_of(weight), weight, cap_diagram_of(weight))

    def __str__(self) -> str:
        return f"{self.cup}|{self.weight}|{self.cap}"

    def __repr__(self) -> str:
        return f"BasisDiagram('{self}')"

    @property
    def size(self) -> int:
        return len(self.weight)

    @property
    def is_closed(self) -> bool:
        return self.cup.is_closed and self.cap.is_closed

    @property
    def sort_key(self) -> tuple:
        return (self.weight.free_pattern_key, self.weight.order_key, self.cup.arcs, self.cap.arcs)

    @property
    def cup_weight(self) -> Weight:
        """α with a = α̲ and α ⊂ λ."""
        return reorient(self.cup, self.weight)

    @property
    def cap_weight(self) -> Weight:
        """β with b = β̄ and λ ⊃ β."""
        return reorient(self.cap, self.weight)

    def star(self) -> BasisDiagram:
        """(aλb)* = (b* λ a*)."""
        return BasisDiagram(self.cap.mirror(), self.weight, self.cup.mirror())

    def rotated(self) -> BasisDiagram:
        """(aλb)↶ = (b↶ λ↶ a↶)."""
        return BasisDiagram(self.cap.rotated(), self.weight.rotated(), self.cup.rotated())


def degree(x: BasisDiagram) -> int:
    return x.degree
