# core/algebra/diagram_algebra.py
"""
The algebras K_Λ and H_Λ over a finite block Λ.

K_Λ has basis all oriented circle diagrams (α̲ λ β̄) with α ⊂ λ ⊃ β;
H_Λ keeps those with α, β of maximal defect. Both use the same product.
"""
from __future__ import annotations

import logging
from collections import Counter
from enum import Enum
from functools import lru_cache
from typing import Dict, Optional, Tuple

from core.diagrams.arcs import cap_diagram_of, cup_diagram_of
from core.diagrams.blocks import Block
from core.diagrams.oriented import BasisDiagram, is_oriented
from core.diagrams.weights import Weight
from core.exceptions import BlockMismatchError, PreconditionError
from core.numeric.laurent import LaurentPoly
from core.surgery.closure import multiply_via_closure
from core.surgery.element import Element
from core.surgery.engine import bilinear, multiply_generalized
from core.topology.circle_graph import CircleGraph

logger = logging.getLogger(__name__)


class AlgebraKind(Enum):
    K = "K"
    H = "H"


class Route(Enum):
    GENERALIZED = "generalized"
    CLOSURE = "closure"


# ----------------------------------------------------------------------
# Bases
# ----------------------------------------------------------------------
@lru_cache(maxsize=1024)
def basis_K(block: Block) -> Tuple[BasisDiagram, ...]:
    out = []
    for lam in block:
        halves = block.subsets(lam)
        cups = [cup_diagram_of(alpha) for alpha in halves]
        caps = [cap_diagram_of(beta) for beta in halves]
        out.extend(BasisDiagram(a, lam, b) for a in cups for b in caps)
    out.sort(key=lambda x: x.sort_key)
    logger.debug("basis of K over '%s': %d diagrams", block, len(out))
    return tuple(out)


def in_H(x: BasisDiagram, block: Block) -> bool:
    """Both halves come from weights of maximal defect."""
    top = block.defect
    return len(x.cup.arcs) == top and len(x.cap.arcs) == top


@lru_cache(maxsize=1024)
def basis_H(block: Block) -> Tuple[BasisDiagram, ...]:
    return tuple(x for x in basis_K(block) if in_H(x, block))


def block_of(x: BasisDiagram) -> Block:
    return Block.of(x.weight)


# ----------------------------------------------------------------------
# Products
# ----------------------------------------------------------------------
def multiply(x: Element, y: Element, route: Route = Route.GENERALIZED,
             trace: Optional[Counter] = None) -> Element:
    """Bilinear product; the closure route is kept as an independent oracle."""
    fn = multiply_generalized if route is Route.GENERALIZED else multiply_via_closure
    return bilinear(x, y, lambda a, b: fn(a, b, trace=trace))


def idempotent(weight: Weight) -> Element:
    return Element.basis(BasisDiagram.idempotent(weight))


# ----------------------------------------------------------------------
# Anti-automorphisms
# ----------------------------------------------------------------------
def star(x: Element) -> Element:
    """(aλb) ↦ (b*λa*)."""
    return x.map_basis(BasisDiagram.star)


def rotate(x: Element) -> Element:
    """(aλb) ↦ (b↶ λ↶ a↶), landing in the rotated block."""
    return x.map_basis(BasisDiagram.rotated)


# ----------------------------------------------------------------------
# Structure constants
# ----------------------------------------------------------------------
@lru_cache(maxsize=65536)
def structure_constant(x: BasisDiagram, mu: Weight) -> int:
    """
    s_x(μ): coefficient of (a μ d) in (a λ b)(b* μ d), computed with d = μ̄.
    Zero when (a, μ) or (b*, μ) is not oriented.
    """
    if len(mu) != x.size or not mu.equivalent(x.weight):
        raise BlockMismatchError(f"Weight '{mu}' is not in the block of '{x}'")
    c = x.cap.mirror()
    if not (is_oriented(x.cup, mu) and is_oriented(c, mu)):
        return 0
    d = cap_diagram_of(mu)
    product = multiply_generalized(x, BasisDiagram(c, mu, d))
    return product.coefficient(BasisDiagram(x.cup, mu, d))


# ----------------------------------------------------------------------
# Symmetrising form on H
# ----------------------------------------------------------------------
def _require_H(x: BasisDiagram, block: Block) -> None:
    if not in_H(x, block):
        raise PreconditionError(f"'{x}' is not a basis vector of H over '{block}'")


def hash_involution(x: BasisDiagram) -> BasisDiagram:
    """x^#: the diagram b* λ' a* where λ' reverses every circle of x."""
    block = block_of(x)
    _require_H(x, block)
    flips = {}
    for circle in CircleGraph(x.cup, x.cap).circles():
        for i in circle.vertices:
            flips[i] = x.weight.at(i).flipped()
    return BasisDiagram(x.cap.mirror(), x.weight.with_labels(flips), x.cup.mirror())


def tau(element: Element) -> int:
    """Sum of the coefficients of top-degree terms; only defined on H."""
    if not element:
        return 0
    block = block_of(element.support[0])
    top = 2 * block.defect
    total = 0
    for x, c in element:
        _require_H(x, block)
        if x.degree == top:
            total += c
    return total


# ----------------------------------------------------------------------
# The algebra as an object
# ----------------------------------------------------------------------
class DiagramAlgebra:
    """
    K_Λ or H_Λ for one block. Products of basis pairs are remembered per
    instance; each entry is written once and only read afterwards.
    """

    def __init__(self, block: Block | Weight | str, kind: AlgebraKind = AlgebraKind.K,
                 route: Route = Route.GENERALIZED):
        self.block = block if isinstance(block, Block) else Block.of(block)
        self.kind = kind
        self.route = route
        self._table: Dict[Tuple[BasisDiagram, BasisDiagram], Element] = {}

    def __repr__(self) -> str:
        return f"<DiagramAlgebra {self.kind.value} block={self.block} dim={len(self.basis)}>"

    @property
    def basis(self) -> Tuple[BasisDiagram, ...]:
        return basis_K(self.block) if self.kind is AlgebraKind.K else basis_H(self.block)

    def __contains__(self, x: BasisDiagram) -> bool:
        if x.weight not in self.block:
            return False
        return self.kind is AlgebraKind.K or in_H(x, self.block)

    def _check(self, x: Element) -> None:
        for b, _ in x:
            if b.weight not in self.block:
                raise BlockMismatchError(f"'{b}' is not in the block of '{self.block}'")

    def multiply_basis(self, x: BasisDiagram, y: BasisDiagram) -> Element:
        key = (x, y)
        if key not in self._table:
            fn = multiply_generalized if self.route is Route.GENERALIZED else multiply_via_closure
            self._table.setdefault(key, fn(x, y))
        return self._table[key]

    def multiply(self, x: Element, y: Element) -> Element:
        self._check(x)
        self._check(y)
        return bilinear(x, y, self.multiply_basis)

    def idempotent(self, weight: Weight) -> Element:
        self.block.require(weight)
        return idempotent(weight)

    def idempotent_weights(self) -> Tuple[Weight, ...]:
        if self.kind is AlgebraKind.K:
            return self.block.members
        return self.block.maximal_defect_subset()

    def identity(self) -> Element:
        """Σ e_λ over K, or over Λ° for H."""
        acc = Element()
        for lam in self.idempotent_weights():
            acc = acc + idempotent(lam)
        return acc

    def graded_dimension(self) -> LaurentPoly:
        return LaurentPoly(Counter(x.degree for x in self.basis))
