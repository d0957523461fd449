# core/reps/matrices.py
"""
q-decomposition and q-Cartan matrices of a block, from their closed formulas.
"""
from __future__ import annotations

from typing import Dict

from core.diagrams.arcs import cup_diagram_of
from core.diagrams.blocks import Block
from core.diagrams.oriented import half_degree, is_oriented
from core.diagrams.weights import Weight
from core.numeric.laurent import LaurentPoly
from core.numeric.poly_matrix import PolyMatrix


def _oriented_degrees(block: Block) -> Dict[Weight, Dict[Weight, int]]:
    """For each λ, the μ ⊃ λ with deg(λ̲ μ)."""
    table: Dict[Weight, Dict[Weight, int]] = {}
    for lam in block:
        cup = cup_diagram_of(lam)
        table[lam] = {mu: half_degree(cup, mu) for mu in block if is_oriented(cup, mu)}
    return table


def decomposition_matrix(block: Block) -> PolyMatrix:
    """d_{λ,μ} = q^{deg(λ̲ μ)} when λ ⊂ μ, else 0."""
    table = _oriented_degrees(block)

    def entry(lam: Weight, mu: Weight) -> LaurentPoly:
        deg = table[lam].get(mu)
        return LaurentPoly.zero() if deg is None else LaurentPoly.monomial(deg)

    return PolyMatrix.build(block.members, entry)


def cartan_matrix(block: Block) -> PolyMatrix:
    """c_{λ,μ} = Σ_{λ ⊂ ν ⊃ μ} q^{deg(λ̲ ν) + deg(ν μ̄)}."""
    table = _oriented_degrees(block)

    def entry(lam: Weight, mu: Weight) -> LaurentPoly:
        left, right = table[lam], table[mu]
        return LaurentPoly((left[nu] + right[nu], 1) for nu in left if nu in right)

    return PolyMatrix.build(block.members, entry)
