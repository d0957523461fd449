# core/verify/suites/triangular.py
"""
Shape of a product (aλb)(b*μd): every term is some (aνd) with λ ≤ ν ≥ μ,
coefficients are non-negative, and the coefficients on (aμd) and (aλd) are
the structure constants, whatever d is.
"""
from __future__ import annotations

from typing import List

from core.algebra.diagram_algebra import basis_K, structure_constant
from core.diagrams.arcs import cup_diagram_of
from core.diagrams.blocks import bruhat_leq
from core.diagrams.oriented import BasisDiagram, is_oriented
from core.surgery.engine import multiply_generalized
from core.verify.base import Case, VerificationSuite, composable_pairs
from core.verify.registry import SuiteFactory


class TriangularSuite(VerificationSuite):
    suite_name = "triangular"
    description = "triangularity and structure constants of products"

    def check(self, case: Case) -> List[str]:
        block = self.block_of(case)
        found: List[str] = []

        for lam in block:
            for mu in block:
                if is_oriented(cup_diagram_of(lam), mu):
                    s = structure_constant(BasisDiagram.idempotent(lam), mu)
                    if s != 1:
                        found.append(f"s_e({lam})({mu}) = {s}, expected 1")

        for x, y in composable_pairs(basis_K(block)):
            lam, mu = x.weight, y.weight
            product = multiply_generalized(x, y)
            for z, c in product:
                if z.cup != x.cup or z.cap != y.cap:
                    found.append(f"{x} * {y} has a term {z} with foreign halves")
                if c < 0:
                    found.append(f"{x} * {y} has coefficient {c} on {z}")
                if not (bruhat_leq(lam, z.weight) and bruhat_leq(mu, z.weight)):
                    found.append(f"{x} * {y} has a term {z} not above both weights")

            if is_oriented(x.cup, mu):
                s = structure_constant(x, mu)
                if s not in (0, 1):
                    found.append(f"structure constant of {x} at {mu} is {s}")
                got = product.coefficient(BasisDiagram(x.cup, mu, y.cap))
                if got != s:
                    found.append(f"{x} * {y}: coefficient {got} on the μ term, structure constant {s}")
            if is_oriented(y.cap.mirror(), lam):
                s = structure_constant(y.star(), lam)
                got = product.coefficient(BasisDiagram(x.cup, lam, y.cap))
                if got != s:
                    found.append(f"{x} * {y}: coefficient {got} on the λ term, structure constant {s}")
        return found


SuiteFactory.register(TriangularSuite)
