# core/numeric/laurent.py
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Tuple

import sympy as sp

from core.exceptions import ParseError
from core.safe_math import Q, parse_expr


@dataclass(frozen=True, slots=True)
class LaurentPoly:
    """
    Integer Laurent polynomial in q.

    * Terms kept as (exponent, coefficient) pairs, ascending, no zeros.
    * Hashable and picklable, so usable as a matrix entry anywhere.
    """
    terms: Tuple[Tuple[int, int], ...]

    def __init__(self, terms: Mapping[int, int] | Iterable[Tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for exp, coeff in items:
            acc[int(exp)] = acc.get(int(exp), 0) + int(coeff)
        object.__setattr__(self, "terms", tuple(sorted((e, c) for e, c in acc.items() if c)))

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------
    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls()

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls({0: 1})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        return cls({exp: coeff})

    @classmethod
    def from_expr(cls, expr: sp.Expr) -> LaurentPoly:
        acc: dict[int, int] = {}
        for term in sp.Add.make_args(sp.expand(expr)):
            coeff, exp = term.as_coeff_exponent(Q)
            if not (coeff.is_Integer and exp.is_Integer):
                raise ParseError(f"'{term}' is not an integer multiple of a power of q")
            acc[int(exp)] = acc.get(int(exp), 0) + int(coeff)
        return cls(acc)

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        return cls.from_expr(parse_expr(text))

    def to_expr(self) -> sp.Expr:
        return sp.Add(*(c * Q**e for e, c in self.terms))

    # ------------------------------------------------------------------
    # Text form: ascending exponents, "0", "q", "1+q^2", "2q^-1-q"
    # ------------------------------------------------------------------
    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for e, c in self.terms:
            if e == 0:
                piece = str(c)
            else:
                power = "q" if e == 1 else f"q^{e}"
                piece = power if c == 1 else ("-" + power if c == -1 else f"{c}{power}")
            out += piece if (not out or piece.startswith("-")) else "+" + piece
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"

    # ------------------------------------------------------------------
    # Ring operations
    # ------------------------------------------------------------------
    @staticmethod
    def _lift(other: LaurentPoly | int) -> LaurentPoly:
        return other if isinstance(other, LaurentPoly) else LaurentPoly({0: other})

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        return LaurentPoly(self.terms + self._lift(other).terms)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly((e, -c) for e, c in self.terms)

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return self + (-self._lift(other))

    def __rsub__(self, other: int) -> LaurentPoly:
        return self._lift(other) - self

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = self._lift(other)
        return LaurentPoly((e1 + e2, c1 * c2) for e1, c1 in self.terms for e2, c2 in other.terms)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            raise ValueError("Only non-negative powers of a Laurent polynomial are defined")
        out = LaurentPoly.one()
        for _ in range(k):
            out = out * self
        return out

    def __bool__(self) -> bool:
        return bool(self.terms)

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------
    def coefficient(self, exp: int) -> int:
        return dict(self.terms).get(exp, 0)

    def evaluate(self, value: int | Fraction = 1) -> int | Fraction:
        total = sum(c * Fraction(value) ** e for e, c in self.terms)
        total = Fraction(total)
        return int(total) if total.denominator == 1 else total

    def bar(self) -> LaurentPoly:
        """q ↦ q^-1."""
        return LaurentPoly((-e, c) for e, c in self.terms)

    def is_palindromic(self) -> bool:
        """Symmetric about the middle of its exponent range."""
        if not self.terms:
            return True
        shift = self.terms[0][0] + self.terms[-1][0]
        return self == self.bar() * LaurentPoly.monomial(shift)


q = LaurentPoly.monomial(1)
