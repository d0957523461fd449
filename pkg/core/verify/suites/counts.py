# core/verify/suites/counts.py
"""
Combinatorial checks on one block: weights, cup diagrams, the Bruhat order,
degrees and the q-matrices built from them.
"""
from __future__ import annotations

from typing import List

import numpy as np
import sympy as sp

from core.algebra.diagram_algebra import basis_H, basis_K
from core.diagrams.arcs import cup_diagram_of
from core.diagrams.blocks import Block, bruhat_leq, bruhat_leq_generative
from core.diagrams.oriented import defect, half_degree, is_oriented, reorient, subset_rel
from core.diagrams.weights import Label
from core.numeric.laurent import LaurentPoly
from core.reps.matrices import cartan_matrix, decomposition_matrix
from core.reps.modules import CellModule, ProjectiveModule
from core.topology.circle_graph import CircleGraph
from core.verify.base import Case, VerificationSuite
from core.verify.registry import SuiteFactory
from utils.matrix import sum_of_squared_column_sums


class CountsSuite(VerificationSuite):
    suite_name = "counts"
    description = "cup diagrams, Bruhat order, 2^defect, Catalan, q-matrices"

    def check(self, case: Case) -> List[str]:
        block = self.block_of(case)
        rng = self.rng(case)
        found: List[str] = []
        members = block.members

        for lam in members:
            cup = cup_diagram_of(lam)
            if cup_diagram_of(lam, pick=lambda pairs: pairs[-1]) != cup \
                    or cup_diagram_of(lam, pick=rng.choice) != cup:
                found.append(f"cup diagram of {lam} depends on the matching order")
            if not is_oriented(cup, lam) or half_degree(cup, lam) != 0:
                found.append(f"({cup}, {lam}) is not oriented of degree 0")
            tops = block.supersets(lam)
            if len(tops) != 2 ** defect(lam):
                found.append(f"{lam} lies under {len(tops)} weights, expected 2^{defect(lam)}")

        cups = [cup_diagram_of(lam) for lam in members]
        if len(set(cups)) != len(cups):
            found.append("two weights share a cup diagram")

        # the unique weight under λ with a given cup diagram
        for lam in members:
            for cup in cups:
                if not is_oriented(cup, lam):
                    continue
                under = [a for a in members if cup_diagram_of(a) == cup and subset_rel(a, lam)]
                if under != [reorient(cup, lam)]:
                    found.append(f"({cup}, {lam}) lies over {[str(a) for a in under]}")

        for lam in members:
            for mu in members:
                fast = bruhat_leq(lam, mu)
                if fast != bruhat_leq_generative(block, lam, mu):
                    found.append(f"Bruhat order disagrees on {lam} <= {mu}")
                if subset_rel(lam, mu) and not fast:
                    found.append(f"{lam} ⊂ {mu} but not {lam} <= {mu}")

        found.extend(self._catalan(block))
        found.extend(self._component_degrees(block))
        found.extend(self._matrices(block))
        found.extend(self._modules(block))
        return found

    @staticmethod
    def _catalan(block: Block) -> List[str]:
        rep = block.representative
        n = rep.count(Label.DOWN)
        if rep.core_positions != tuple(range(1, len(rep) + 1)) or n != rep.count(Label.UP):
            return []
        got = len(block.maximal_defect_subset())
        expected = int(sp.catalan(n))
        return [] if got == expected else [f"|maximal defect| = {got}, expected Catalan({n}) = {expected}"]

    @staticmethod
    def _component_degrees(block: Block) -> List[str]:
        found = []
        for x in basis_K(block):
            graph = CircleGraph(x.cup, x.cap)
            total = sum(graph.component_degree(c, x.weight) for c in graph.components())
            if total != x.degree:
                found.append(f"components of {x} carry degree {total}, diagram has {x.degree}")
        return found

    @staticmethod
    def _matrices(block: Block) -> List[str]:
        found = []
        D = decomposition_matrix(block)
        C = cartan_matrix(block)
        if not D.is_upper_unitriangular():
            found.append("decomposition matrix is not upper unitriangular")
        if C != D @ D.transpose():
            found.append("Cartan matrix differs from D·Dᵀ")
        if not C.is_symmetric():
            found.append("Cartan matrix is not symmetric")
        for i in range(len(C)):
            for j in range(len(C)):
                if C[i, j].coefficient(0) != int(i == j):
                    found.append(f"Cartan entry ({i}, {j}) has constant term {C[i, j].coefficient(0)}")

        at_one = D.evaluate(1)
        if sum_of_squared_column_sums(at_one) != len(basis_K(block)):
            found.append("dim K differs from the decomposition matrix count")
        rows = [block.index(w) for w in block.maximal_defect_subset()]
        if sum_of_squared_column_sums(at_one[np.array(rows, dtype=int)]) != len(basis_H(block)):
            found.append("dim H differs from the decomposition matrix count")
        return found

    @staticmethod
    def _modules(block: Block) -> List[str]:
        found = []
        D = decomposition_matrix(block)
        for lam in block:
            column = sum(D.column(lam), LaurentPoly.zero())
            if CellModule(lam, block).graded_dimension() != column:
                found.append(f"layers of V({lam}) disagree with the decomposition matrix")

            proj = ProjectiveModule(lam, block)
            filt = proj.filtration()
            if len(filt) != 2 ** defect(lam) or filt.sections[-1] != (lam, 0):
                found.append(f"bad cell filtration {filt}")
            expected = LaurentPoly.zero()
            for mu, shift in filt:
                expected = expected + LaurentPoly.monomial(shift) * CellModule(mu, block).graded_dimension()
            if proj.graded_dimension() != expected:
                found.append(f"dim P({lam}) = {proj.graded_dimension()}, filtration gives {expected}")
        return found


SuiteFactory.register(CountsSuite)
