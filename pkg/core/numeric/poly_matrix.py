# core/numeric/poly_matrix.py
"""
Square matrices of Laurent polynomials indexed by the members of a block.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence, Tuple

import numpy as np
import sympy as sp

from core.diagrams.weights import Weight
from core.exceptions import BlockMismatchError
from core.numeric.laurent import LaurentPoly
from utils.matrix import integer_matrix


@dataclass(frozen=True, slots=True)
class PolyMatrix:
    index: Tuple[Weight, ...]
    rows: Tuple[Tuple[LaurentPoly, ...], ...]

    @classmethod
    def build(cls, index: Sequence[Weight], entry: Callable[[Weight, Weight], LaurentPoly]) -> PolyMatrix:
        index = tuple(index)
        return cls(index, tuple(tuple(entry(lam, mu) for mu in index) for lam in index))

    def __len__(self) -> int:
        return len(self.index)

    def __getitem__(self, ij: Tuple[int, int]) -> LaurentPoly:
        i, j = ij
        return self.rows[i][j]

    def entry(self, lam: Weight, mu: Weight) -> LaurentPoly:
        return self.rows[self.index.index(lam)][self.index.index(mu)]

    def column(self, mu: Weight) -> Tuple[LaurentPoly, ...]:
        j = self.index.index(mu)
        return tuple(row[j] for row in self.rows)

    def transpose(self) -> PolyMatrix:
        n = len(self.index)
        return PolyMatrix(self.index, tuple(tuple(self.rows[i][j] for i in range(n)) for j in range(n)))

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        if self.index != other.index:
            raise BlockMismatchError("Matrices are indexed by different blocks")
        n = len(self.index)
        # only nonzero entries contribute; these matrices are mostly zero
        nonzero = [[(j, v) for j, v in enumerate(row) if v] for row in other.rows]
        out = []
        for i in range(n):
            acc: dict[int, LaurentPoly] = {}
            for k, a in enumerate(self.rows[i]):
                if not a:
                    continue
                for j, b in nonzero[k]:
                    acc[j] = acc.get(j, LaurentPoly.zero()) + a * b
            out.append(tuple(acc.get(j, LaurentPoly.zero()) for j in range(n)))
        return PolyMatrix(self.index, tuple(out))

    # ------------------------------------------------------------------
    # Shape checks
    # ------------------------------------------------------------------
    def is_upper_unitriangular(self) -> bool:
        one = LaurentPoly.one()
        n = len(self.index)
        for i in range(n):
            if self.rows[i][i] != one:
                return False
            if any(self.rows[i][j] for j in range(i)):
                return False
        return True

    def is_symmetric(self) -> bool:
        return self == self.transpose()

    # ------------------------------------------------------------------
    # Interop
    # ------------------------------------------------------------------
    def evaluate(self, value: int = 1) -> np.ndarray:
        return integer_matrix([[p.evaluate(value) for p in row] for row in self.rows])

    def to_sympy(self) -> sp.Matrix:
        return sp.Matrix([[p.to_expr() for p in row] for row in self.rows])

    def __str__(self) -> str:
        labels = [str(w) for w in self.index]
        return "\n".join(f"{lab}: " + " ".join(str(p) for p in row)
                         for lab, row in zip(labels, self.rows))
