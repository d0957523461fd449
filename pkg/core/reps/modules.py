# core/reps/modules.py
"""
Graded modules over K_Λ represented by explicit bases: cell modules V(μ),
projectives P(λ) = K_Λ e_λ and simples L(λ).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Dict, Mapping, Tuple

import networkx as nx

from core.algebra.diagram_algebra import basis_K, structure_constant
from core.diagrams.arcs import ArcDiagram, cap_diagram_of, cup_diagram_of
from core.diagrams.blocks import Block, bruhat_leq
from core.diagrams.oriented import BasisDiagram, half_degree, is_oriented
from core.diagrams.weights import Weight
from core.exceptions import BlockMismatchError
from core.numeric.laurent import LaurentPoly
from core.surgery.element import Element

Vector = Dict[ArcDiagram, int]


@dataclass(frozen=True, slots=True)
class Filtration:
    """
    Ordered sections (weight, shift). For P(λ) the sections are the cell
    modules V(μ)⟨shift⟩ from the bottom up; for V(μ) they are the layers
    L(λ)⟨j⟩ in grading order.
    """
    module: str
    sections: Tuple[Tuple[Weight, int], ...]

    def __len__(self) -> int:
        return len(self.sections)

    def __iter__(self):
        return iter(self.sections)

    def shifts(self) -> LaurentPoly:
        return LaurentPoly(Counter(shift for _, shift in self.sections))

    def __str__(self) -> str:
        parts = [f"{w}<{s}>" for w, s in self.sections]
        return f"{self.module}: " + ", ".join(parts)


def _clean(vec: Mapping[ArcDiagram, int]) -> Vector:
    return {c: v for c, v in vec.items() if v}


def cell_action(x: BasisDiagram, mu: Weight, c: ArcDiagram) -> Vector:
    """(aλb)·(cμ| = s_{aλb}(μ)(aμ| when b* = c and (a, μ) is oriented, else 0."""
    if x.cap.mirror() != c or not is_oriented(x.cup, mu):
        return {}
    return _clean({x.cup: structure_constant(x, mu)})


class CellModule:
    """V(μ): basis the oriented cup diagrams (λ̲ μ| for λ ⊂ μ, in block order."""

    def __init__(self, mu: Weight, block: Block | None = None):
        self.block = block or Block.of(mu)
        self.block.require(mu)
        self.mu = mu
        self.weights: Tuple[Weight, ...] = self.block.subsets(mu)
        self.basis: Tuple[ArcDiagram, ...] = tuple(cup_diagram_of(lam) for lam in self.weights)
        self.degrees: Tuple[int, ...] = tuple(half_degree(c, mu) for c in self.basis)

    def __repr__(self) -> str:
        return f"<CellModule mu={self.mu} dim={len(self.basis)}>"

    def __len__(self) -> int:
        return len(self.basis)

    def graded_dimension(self) -> LaurentPoly:
        return LaurentPoly(Counter(self.degrees))

    def degree_of(self, c: ArcDiagram) -> int:
        return self.degrees[self.basis.index(c)]

    def act(self, x: Element, vector: Mapping[ArcDiagram, int]) -> Vector:
        out: Counter = Counter()
        for b, cb in x:
            if b.weight not in self.block:
                raise BlockMismatchError(f"'{b}' does not act on V({self.mu})")
            for c, cv in vector.items():
                for a, s in cell_action(b, self.mu, c).items():
                    out[a] += cb * cv * s
        return _clean(out)

    def layers(self) -> Filtration:
        """Layer j holds the λ ⊂ μ with deg(λ̲ μ) = j."""
        sections = sorted(zip(self.weights, self.degrees), key=lambda t: t[1])
        return Filtration(f"V({self.mu})", tuple(sections))


def cell_module(mu: Weight, block: Block | None = None) -> CellModule:
    return CellModule(mu, block)


class ProjectiveModule:
    """P(λ) = K_Λ e_λ: the basis diagrams whose cap diagram is λ̄."""

    def __init__(self, lam: Weight, block: Block | None = None):
        self.block = block or Block.of(lam)
        self.block.require(lam)
        self.lam = lam
        cap = cap_diagram_of(lam)
        self.basis: Tuple[BasisDiagram, ...] = tuple(x for x in basis_K(self.block) if x.cap == cap)

    def __repr__(self) -> str:
        return f"<ProjectiveModule lam={self.lam} dim={len(self.basis)}>"

    def graded_dimension(self) -> LaurentPoly:
        return LaurentPoly(Counter(x.degree for x in self.basis))

    def filtration(self) -> Filtration:
        return projective_filtration(self.lam, self.block)


@dataclass(frozen=True, slots=True)
class SimpleModule:
    """L(λ): one-dimensional, concentrated in degree 0."""
    lam: Weight

    def graded_dimension(self) -> LaurentPoly:
        return LaurentPoly.one()


def projective_filtration(lam: Weight, block: Block | None = None) -> Filtration:
    """
    Sections V(μ)⟨deg(μ λ̄)⟩ for the μ ⊃ λ, bigger weights first; incomparable
    weights keep block order.
    """
    block = block or Block.of(lam)
    block.require(lam)
    tops = block.supersets(lam)
    order = nx.DiGraph()
    order.add_nodes_from(tops)
    for a in tops:
        for b in tops:
            if a != b and bruhat_leq(b, a):
                order.add_edge(a, b)
    position = {w: i for i, w in enumerate(block.members)}
    ranked = nx.lexicographical_topological_sort(order, key=lambda w: position[w])
    cap = cap_diagram_of(lam)
    return Filtration(f"P({lam})", tuple((mu, half_degree(cap, mu)) for mu in ranked))
