# core/verify/base.py
"""
Base VerificationSuite API for arcalg.
A suite splits its work into picklable cases and checks one case at a time,
returning the counterexamples it found.
"""
from __future__ import annotations

import random
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Dict, Iterator, List, Sequence, Tuple

from core.diagrams.blocks import Block, iter_blocks
from core.diagrams.oriented import BasisDiagram
from core.diagrams.arcs import ArcDiagram
from core.inout.verify_config import VerifyConfig


@dataclass(frozen=True, order=True)
class Case:
    """One unit of work; cases sort smallest first."""
    size: int
    label: str
    suite: str


class VerificationSuite(ABC):
    """
    Abstract base class for verification suites.
    Subclasses define `suite_name`, how to enumerate cases and how to check one.
    """
    suite_name: str = ""
    description: str = ""

    def __init__(self, config: VerifyConfig):
        self.config = config

    def blocks(self, max_vertices: int | None = None) -> Iterator[Block]:
        limit = self.config.max_vertices if max_vertices is None else max_vertices
        return iter_blocks(limit, include_free=self.config.include_free)

    def cases(self) -> List[Case]:
        """One case per block by default."""
        return [Case(b.size, str(b), self.suite_name) for b in self.blocks()]

    def block_of(self, case: Case) -> Block:
        return Block.of(case.label)

    def rng(self, case: Case) -> random.Random:
        """Deterministic per case, derived from the run seed."""
        return random.Random(f"{self.config.seed}:{self.suite_name}:{case.label}")

    @abstractmethod
    def check(self, case: Case) -> List[str]:
        """Counterexamples found for `case`; empty when it passes."""
        pass


def composable_pairs(basis: Sequence[BasisDiagram]) -> List[Tuple[BasisDiagram, BasisDiagram]]:
    """All (x, y) with cap(x)* = cup(y), in basis order."""
    index = by_cup(basis)
    return [(x, y) for x in basis for y in index.get(x.cap.mirror(), [])]


def by_cup(basis: Sequence[BasisDiagram]) -> Dict[ArcDiagram, List[BasisDiagram]]:
    out: Dict[ArcDiagram, List[BasisDiagram]] = {}
    for y in basis:
        out.setdefault(y.cup, []).append(y)
    return out
