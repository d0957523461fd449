# core/verify/suites/symmetric.py
from __future__ import annotations

from collections import Counter
from typing import List

from core.algebra.diagram_algebra import basis_H, hash_involution, in_H, tau
from core.surgery.engine import multiply_generalized
from core.verify.base import Case, VerificationSuite
from core.verify.registry import SuiteFactory
from utils.matrix import integer_matrix, is_permutation_matrix, permutation_of


class SymmetricSuite(VerificationSuite):
    """H is closed, symmetric under τ, and never needs the line-merging rule."""
    suite_name = "symmetric"
    description = "symmetrising form on H, the # involution, closure of H"

    def check(self, case: Case) -> List[str]:
        block = self.block_of(case)
        basis = basis_H(block)
        top = 2 * block.defect
        found: List[str] = []

        for x in basis:
            partner = hash_involution(x)
            if not in_H(partner, block) or hash_involution(partner) != x:
                found.append(f"# is not an involution of H at {x}")
            if partner.degree != top - x.degree:
                found.append(f"deg {x}^# = {partner.degree}, expected {top - x.degree}")

        trace: Counter = Counter()
        gram = []
        for x in basis:
            row = []
            for y in basis:
                product = multiply_generalized(x, y, trace=trace)
                outside = [z for z in product.support if not in_H(z, block)]
                if outside:
                    found.append(f"{x} * {y} leaves H: {outside[0]}")
                row.append(tau(product) if not outside else 0)
            gram.append(row)
        if trace["y⊗y"]:
            found.append(f"lines were merged {trace['y⊗y']} time(s) inside H")

        M = integer_matrix(gram)
        if not is_permutation_matrix(M):
            found.append("Gram matrix of τ is not a permutation matrix")
        else:
            expected = [basis.index(hash_involution(x)) for x in basis]
            if permutation_of(M) != expected:
                found.append("Gram matrix of τ does not pair x with x^#")
        return found


SuiteFactory.register(SymmetricSuite)
