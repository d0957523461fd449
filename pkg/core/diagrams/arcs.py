# core/diagrams/arcs.py
"""
Cup and cap diagrams.

A single `ArcDiagram` type covers both halves of a circle diagram; the
`polarity` says whether its arcs hang below the number line (cups, rays
pointing down) or above it (caps, rays pointing up).
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Callable, Optional, Sequence, Tuple

from core.diagrams.weights import Label, Weight
from core.exceptions import ParseError
from core.validation import validate_arc_layout

Arc = Tuple[int, int]


class Polarity(Enum):
    CUP = "cup"
    CAP = "cap"

    def opposite(self) -> Polarity:
        return Polarity.CAP if self is Polarity.CUP else Polarity.CUP


class Role(Enum):
    FREE = "free"
    RAY = "ray"
    ARC = "arc"


@dataclass(frozen=True, slots=True)
class ArcDiagram:
    size: int
    arcs: Tuple[Arc, ...]
    rays: Tuple[int, ...]
    polarity: Polarity = Polarity.CUP
    _partner: Tuple[int, ...] = field(default=(), compare=False, repr=False)

    def __init__(self, size: int, arcs: Sequence[Arc] = (), rays: Sequence[int] = (),
                 polarity: Polarity = Polarity.CUP):
        arcs = tuple(sorted((min(i, j), max(i, j)) for i, j in arcs))
        rays = tuple(sorted(rays))
        validate_arc_layout(size, arcs, rays)
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "rays", rays)
        object.__setattr__(self, "polarity", polarity)
        partner = [0] * (size + 1)
        for i, j in arcs:
            partner[i], partner[j] = j, i
        object.__setattr__(self, "_partner", tuple(partner))

    # ------------------------------------------------------------------
    # Text form: "(1,4);(2,3)"; rays and free vertices come from a weight
    # ------------------------------------------------------------------
    @classmethod
    def parse(cls, text: str, weight: Weight, polarity: Polarity = Polarity.CUP) -> ArcDiagram:
        arcs: list[Arc] = []
        text = text.strip()
        if text:
            for chunk in text.split(";"):
                m = re.fullmatch(r"\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*", chunk)
                if not m:
                    raise ParseError(f"Malformed arc '{chunk}' in '{text}'")
                arcs.append((int(m.group(1)), int(m.group(2))))
        ends = {e for arc in arcs for e in arc}
        rays = [i for i in weight.core_positions if i not in ends]
        return cls(len(weight), arcs, rays, polarity)

    def to_text(self) -> str:
        return ";".join(f"({i},{j})" for i, j in self.arcs)

    def __str__(self) -> str:
        return self.to_text()

    # ------------------------------------------------------------------
    # Vertex roles
    # ------------------------------------------------------------------
    def partner(self, i: int) -> Optional[int]:
        return self._partner[i] or None

    def role(self, i: int) -> Role:
        if i in self.rays:
            return Role.RAY
        if self.partner(i) is not None:
            return Role.ARC
        return Role.FREE

    @property
    def free_positions(self) -> Tuple[int, ...]:
        taken = set(self.rays) | {e for arc in self.arcs for e in arc}
        return tuple(i for i in range(1, self.size + 1) if i not in taken)

    @property
    def is_closed(self) -> bool:
        return not self.rays

    # ------------------------------------------------------------------
    # Symmetries
    # ------------------------------------------------------------------
    def mirror(self) -> ArcDiagram:
        """c ↦ c*: reflect in the number line."""
        return ArcDiagram(self.size, self.arcs, self.rays, self.polarity.opposite())

    def rotated(self) -> ArcDiagram:
        """c ↦ c↶: rotate through 180 degrees."""
        n = self.size
        return ArcDiagram(n, [(n + 1 - j, n + 1 - i) for i, j in self.arcs],
                          [n + 1 - r for r in self.rays], self.polarity.opposite())

    def as_polarity(self, polarity: Polarity) -> ArcDiagram:
        return self if self.polarity is polarity else self.mirror()


# ----------------------------------------------------------------------
# The canonical degree-0 diagrams λ̲ and λ̄
# ----------------------------------------------------------------------
def eligible_pairs(weight: Weight, matched: set[int]) -> list[Arc]:
    """∨∧ pairs with only free or already matched vertices between them."""
    pairs: list[Arc] = []
    open_down: Optional[int] = None
    for i in weight.core_positions:
        if i in matched:
            continue
        lab = weight.at(i)
        if lab is Label.DOWN:
            open_down = i
        elif open_down is not None:
            pairs.append((open_down, i))
            open_down = None
    return pairs


def cup_diagram_of(weight: Weight, pick: Callable[[list[Arc]], Arc] | None = None) -> ArcDiagram:
    """
    λ̲: join neighbouring ∨∧ pairs by cups until none are left, then put rays
    on the remaining ∨/∧ vertices. `pick` chooses among the eligible pairs
    (leftmost by default); the result does not depend on it.
    """
    if pick is None:
        return _canonical_cups(weight)
    return _match(weight, pick)


@lru_cache(maxsize=65536)
def _canonical_cups(weight: Weight) -> ArcDiagram:
    return _match(weight, lambda pairs: pairs[0])


def _match(weight: Weight, pick: Callable[[list[Arc]], Arc]) -> ArcDiagram:
    matched: set[int] = set()
    arcs: list[Arc] = []
    while True:
        pairs = eligible_pairs(weight, matched)
        if not pairs:
            break
        i, j = pick(pairs)
        arcs.append((i, j))
        matched.update((i, j))
    rays = [i for i in weight.core_positions if i not in matched]
    return ArcDiagram(len(weight), arcs, rays, Polarity.CUP)


def cap_diagram_of(weight: Weight) -> ArcDiagram:
    """λ̄, the mirror image of λ̲."""
    return cup_diagram_of(weight).mirror()
