# core/verify/suites/oracle.py
from __future__ import annotations

from typing import List

from core.algebra.diagram_algebra import basis_K
from core.surgery.closure import multiply_via_closure
from core.surgery.engine import multiply_generalized
from core.verify.base import Case, VerificationSuite, composable_pairs
from core.verify.registry import SuiteFactory


class OracleSuite(VerificationSuite):
    """The direct product agrees with multiplying closures and dropping the ideal."""
    suite_name = "oracle"
    description = "generalized surgery against the closure route"

    def check(self, case: Case) -> List[str]:
        found: List[str] = []
        for x, y in composable_pairs(basis_K(self.block_of(case))):
            direct = multiply_generalized(x, y)
            via = multiply_via_closure(x, y)
            if direct != via:
                found.append(f"{x} * {y}: surgery gives {direct}, closure gives {via}")
        return found


SuiteFactory.register(OracleSuite)
