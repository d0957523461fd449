# core/surgery/element.py
"""
Element: a finite integer combination of basis diagrams from one block.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Tuple

from core.diagrams.oriented import BasisDiagram
from core.exceptions import BlockMismatchError, ParseError

_TERM_RE = re.compile(r"^([+-]\d+)\s*[·*]\((.*)\)$")


@dataclass(frozen=True, slots=True)
class Element:
    terms: Tuple[Tuple[BasisDiagram, int], ...]

    def __init__(self, terms: Mapping[BasisDiagram, int] | Iterable[Tuple[BasisDiagram, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[BasisDiagram, int] = {}
        for x, coeff in items:
            acc[x] = acc.get(x, 0) + int(coeff)
        kept = [(x, c) for x, c in acc.items() if c != 0]
        if kept:
            first = kept[0][0].weight
            for x, _ in kept[1:]:
                if len(x.weight) != len(first) or not x.weight.equivalent(first):
                    raise BlockMismatchError(
                        f"Terms '{x}' and weight '{first}' belong to different blocks")
        kept.sort(key=lambda t: t[0].sort_key)
        object.__setattr__(self, "terms", tuple(kept))

    @classmethod
    def zero(cls) -> Element:
        return cls()

    @classmethod
    def basis(cls, x: BasisDiagram | str) -> Element:
        if isinstance(x, str):
            x = BasisDiagram.parse(x)
        return cls({x: 1})

    # ------------------------------------------------------------------
    # Text form: "+1·((1,2)|^v|(1,2)) -2·(...)"
    # ------------------------------------------------------------------
    @classmethod
    def parse(cls, text: str) -> Element:
        text = text.strip()
        if text == "0":
            return cls()
        acc: list[Tuple[BasisDiagram, int]] = []
        for token in text.split():
            m = _TERM_RE.match(token)
            if m:
                acc.append((BasisDiagram.parse(m.group(2)), int(m.group(1))))
            elif "|" in token and "·" not in token:
                acc.append((BasisDiagram.parse(token), 1))
            else:
                raise ParseError(f"Malformed element term '{token}'")
        if not acc:
            raise ParseError("Empty element text")
        return cls(acc)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " ".join(f"{c:+d}·({x})" for x, c in self.terms)

    def __repr__(self) -> str:
        return f"Element('{self}')"

    # ------------------------------------------------------------------
    # Linear structure
    # ------------------------------------------------------------------
    def __iter__(self) -> Iterator[Tuple[BasisDiagram, int]]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, x: BasisDiagram) -> int:
        for y, c in self.terms:
            if y == x:
                return c
        return 0

    @property
    def support(self) -> Tuple[BasisDiagram, ...]:
        return tuple(x for x, _ in self.terms)

    def __add__(self, other: Element) -> Element:
        return Element(self.terms + other.terms)

    def __neg__(self) -> Element:
        return Element((x, -c) for x, c in self.terms)

    def __sub__(self, other: Element) -> Element:
        return self + (-other)

    def scaled(self, k: int) -> Element:
        return Element((x, k * c) for x, c in self.terms)

    def __rmul__(self, k: int) -> Element:
        return self.scaled(k)

    def map_basis(self, fn) -> Element:
        """Extend a map on basis diagrams linearly."""
        return Element((fn(x), c) for x, c in self.terms)

    def homogeneous(self, degree: int) -> Element:
        return Element((x, c) for x, c in self.terms if x.degree == degree)

    def __mul__(self, other: Element) -> Element:
        # import here to avoid circular-import at module load
        from core.surgery.engine import multiply_elements
        return multiply_elements(self, other)
