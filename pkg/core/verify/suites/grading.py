# core/verify/suites/grading.py
from __future__ import annotations

import itertools
from typing import List

from core.algebra.diagram_algebra import basis_K
from core.surgery.engine import multiply_generalized
from core.surgery.stacked import StackedDiagram
from core.verify.base import Case, VerificationSuite, composable_pairs
from core.verify.registry import SuiteFactory

# every ordering is tried up to this many middle pairs; beyond it a few
ALL_ORDERS_UP_TO = 4


class GradingSuite(VerificationSuite):
    """Products are homogeneous of the summed degree and do not depend on the surgery order."""
    suite_name = "grading"
    description = "degree additivity and surgery order-independence"

    def check(self, case: Case) -> List[str]:
        block = self.block_of(case)
        rng = self.rng(case)
        found: List[str] = []
        for x, y in composable_pairs(basis_K(block)):
            product = multiply_generalized(x, y)
            for z, _ in product:
                if z.degree != x.degree + y.degree:
                    found.append(f"{x} * {y} has a term {z} of degree {z.degree}")

            middle = list(StackedDiagram.stack(x, y).middle)
            if len(middle) <= ALL_ORDERS_UP_TO:
                orders = itertools.permutations(middle)
            else:
                shuffled = middle[:]
                rng.shuffle(shuffled)
                orders = [tuple(reversed(middle)), tuple(shuffled)]
            for order in orders:
                if multiply_generalized(x, y, order=order) != product:
                    found.append(f"{x} * {y} changes under surgery order {list(order)}")
                    break
        return found


SuiteFactory.register(GradingSuite)
