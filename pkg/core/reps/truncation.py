# core/reps/truncation.py
"""
The truncation functor e = Σ_{α ∈ Λ°} e_α from K_Λ-modules to H_Λ-modules,
computed on graded dimensions. For projectives the images are the Young
modules of H_Λ.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from core.diagrams.blocks import Block
from core.diagrams.oriented import defect
from core.exceptions import BlockMismatchError
from core.numeric.laurent import LaurentPoly
from core.reps.modules import CellModule, ProjectiveModule, SimpleModule


@dataclass(frozen=True, slots=True)
class TruncatedDimension:
    module: str
    graded_dimension: LaurentPoly

    @property
    def is_zero(self) -> bool:
        return not self.graded_dimension

    def __str__(self) -> str:
        return f"e{self.module}: {self.graded_dimension}"


def truncate_to_H(block: Block, module: CellModule | ProjectiveModule | SimpleModule) -> TruncatedDimension:
    """Keep the basis vectors whose cup diagram is α̲ for some α of maximal defect."""
    top = block.defect
    if isinstance(module, CellModule):
        if module.block != block:
            raise BlockMismatchError(f"V({module.mu}) is not a module over the block of '{block}'")
        kept = Counter(d for c, d in zip(module.basis, module.degrees) if len(c.arcs) == top)
        return TruncatedDimension(f"V({module.mu})", LaurentPoly(kept))
    if isinstance(module, ProjectiveModule):
        if module.block != block:
            raise BlockMismatchError(f"P({module.lam}) is not a module over the block of '{block}'")
        kept = Counter(x.degree for x in module.basis if len(x.cup.arcs) == top)
        return TruncatedDimension(f"P({module.lam})", LaurentPoly(kept))
    block.require(module.lam)
    dim = LaurentPoly.one() if defect(module.lam) == top else LaurentPoly.zero()
    return TruncatedDimension(f"L({module.lam})", dim)
