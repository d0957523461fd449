# core/verify/suites/cellularity.py
"""
Cellularity: modulo diagrams of higher weight, x·(aμd) = Σ r_x(a', a)(a'μd)
with r_x independent of d, and these r_x are the matrix of x on V(μ).
"""
from __future__ import annotations

from collections import defaultdict
from typing import Dict, List, Tuple

from core.algebra.diagram_algebra import AlgebraKind, DiagramAlgebra
from core.diagrams.arcs import ArcDiagram
from core.diagrams.blocks import bruhat_leq
from core.diagrams.oriented import BasisDiagram
from core.diagrams.weights import Weight
from core.reps.modules import CellModule
from core.surgery.element import Element
from core.verify.base import Case, VerificationSuite, by_cup, composable_pairs
from core.verify.registry import SuiteFactory

Key = Tuple[BasisDiagram, Weight, ArcDiagram]


class CellularitySuite(VerificationSuite):
    suite_name = "cellularity"
    description = "cell datum axiom for K and H, cell module action"

    def check(self, case: Case) -> List[str]:
        block = self.block_of(case)
        found: List[str] = []
        cells = {mu: CellModule(mu, block) for mu in block}
        for kind in AlgebraKind:
            algebra = DiagramAlgebra(block, kind)
            found.extend(self._axiom(algebra, cells))
        found.extend(self._module_law(DiagramAlgebra(block), cells))
        return found

    @staticmethod
    def _axiom(algebra: DiagramAlgebra, cells: Dict[Weight, CellModule]) -> List[str]:
        found = []
        # (x, μ, a) -> {d: leading coefficients keyed by a'}
        seen: Dict[Key, Dict[ArcDiagram, Dict[ArcDiagram, int]]] = defaultdict(dict)
        index = by_cup(algebra.basis)
        for x in algebra.basis:
            for target in index.get(x.cap.mirror(), []):
                mu = target.weight
                leading: Dict[ArcDiagram, int] = {}
                for z, c in algebra.multiply_basis(x, target):
                    if z.weight == mu:
                        leading[z.cup] = c
                    elif not bruhat_leq(mu, z.weight):
                        found.append(f"{x} * {target} has a term {z} below {mu}")
                seen[(x, mu, target.cup)][target.cap] = leading

        for (x, mu, a), by_cap in seen.items():
            r = next(iter(by_cap.values()))
            if any(other != r for other in by_cap.values()):
                found.append(f"{algebra.kind.value}: action of {x} on ({a}, {mu}) depends on the cap diagram")
                continue
            if algebra.kind is AlgebraKind.K and cells[mu].act(Element.basis(x), {a: 1}) != r:
                found.append(f"cell module action of {x} on ({a}, {mu}) disagrees with products")
        return found

    @staticmethod
    def _module_law(algebra: DiagramAlgebra, cells: Dict[Weight, CellModule]) -> List[str]:
        found = []
        pairs = composable_pairs(algebra.basis)
        for mu, cell in cells.items():
            for c in cell.basis:
                for x, y in pairs:
                    once = cell.act(algebra.multiply_basis(x, y), {c: 1})
                    twice = cell.act(Element.basis(x), cell.act(Element.basis(y), {c: 1}))
                    if once != twice:
                        found.append(f"V({mu}): ({x} * {y}) acts on {c} as {once}, in turn as {twice}")
        return found


SuiteFactory.register(CellularitySuite)
