# core/verify/suites/assoc.py
"""
Associativity of K and H, idempotents, the identity element and the two
anti-automorphisms.
"""
from __future__ import annotations

import random
from typing import Iterator, List, Sequence, Tuple

from core.algebra.diagram_algebra import AlgebraKind, DiagramAlgebra, rotate, star
from core.diagrams.oriented import BasisDiagram
from core.surgery.element import Element
from core.verify.base import Case, VerificationSuite, by_cup
from core.verify.registry import SuiteFactory

Triple = Tuple[BasisDiagram, BasisDiagram, BasisDiagram]


def _chains(basis: Sequence[BasisDiagram]) -> Iterator[Triple]:
    """Composable triples; every other triple is zero on both sides."""
    index = by_cup(basis)
    for x in basis:
        for y in index.get(x.cap.mirror(), []):
            for z in index.get(y.cap.mirror(), []):
                yield x, y, z


def _sampled_chains(basis: Sequence[BasisDiagram], count: int, rng: random.Random) -> Iterator[Triple]:
    index = by_cup(basis)
    for _ in range(count):
        x = rng.choice(basis)
        y = rng.choice(index[x.cap.mirror()])
        z = rng.choice(index[y.cap.mirror()])
        yield x, y, z


class AssocSuite(VerificationSuite):
    suite_name = "assoc"
    description = "associativity, idempotents, identity, star and rotation"

    def check(self, case: Case) -> List[str]:
        found: List[str] = []
        rng = self.rng(case)
        for kind in AlgebraKind:
            algebra = DiagramAlgebra(self.block_of(case), kind)
            found.extend(self._associativity(algebra, rng))
            found.extend(self._units(algebra))
            found.extend(self._anti(algebra))
        return found

    def _associativity(self, algebra: DiagramAlgebra, rng: random.Random) -> List[str]:
        basis = algebra.basis
        if len(basis) ** 3 <= self.config.exhaustive_limit:
            triples = _chains(basis)
        else:
            triples = _sampled_chains(basis, self.config.samples, rng)
        found = []
        for x, y, z in triples:
            left = algebra.multiply(algebra.multiply_basis(x, y), Element.basis(z))
            right = algebra.multiply(Element.basis(x), algebra.multiply_basis(y, z))
            if left != right:
                found.append(f"{algebra.kind.value}: ({x} * {y}) * {z} = {left} but {x} * ({y} * {z}) = {right}")
        return found

    @staticmethod
    def _units(algebra: DiagramAlgebra) -> List[str]:
        found = []
        weights = algebra.idempotent_weights()
        for a in weights:
            for b in weights:
                got = algebra.multiply(algebra.idempotent(a), algebra.idempotent(b))
                want = algebra.idempotent(a) if a == b else Element.zero()
                if got != want:
                    found.append(f"e_{a} * e_{b} = {got}")
        one = algebra.identity()
        for x in algebra.basis:
            ex = Element.basis(x)
            if algebra.multiply(one, ex) != ex or algebra.multiply(ex, one) != ex:
                found.append(f"{algebra.kind.value}: identity does not fix {x}")
        return found

    @staticmethod
    def _anti(algebra: DiagramAlgebra) -> List[str]:
        found = []
        index = by_cup(algebra.basis)
        for x in algebra.basis:
            if x.star().degree != x.degree or x.rotated().degree != x.degree:
                found.append(f"star or rotation changes the degree of {x}")
            for y in index.get(x.cap.mirror(), []):
                product = algebra.multiply_basis(x, y)
                ex, ey = Element.basis(x), Element.basis(y)
                if star(product) != star(ey) * star(ex):
                    found.append(f"star is not anti-multiplicative on {x}, {y}")
                if rotate(product) != rotate(ey) * rotate(ex):
                    found.append(f"rotation is not anti-multiplicative on {x}, {y}")
        return found


SuiteFactory.register(AssocSuite)
