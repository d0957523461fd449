# core/diagrams/weights.py
"""
Labels and weights on a finite number line.

Vertices are numbered 1..n from the left. Every public method that takes a
vertex index uses that 1-based numbering.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Tuple

from core.exceptions import ParseError, StructureError


class Label(Enum):
    NOUGHT = "o"
    CROSS = "x"
    DOWN = "v"
    UP = "^"

    @property
    def is_free(self) -> bool:
        return self in (Label.NOUGHT, Label.CROSS)

    @property
    def is_core(self) -> bool:
        return not self.is_free

    def flipped(self) -> Label:
        """Swap ∨ and ∧; free labels are fixed."""
        if self is Label.DOWN:
            return Label.UP
        if self is Label.UP:
            return Label.DOWN
        return self


_BY_TEXT = {label.value: label for label in Label}


@dataclass(frozen=True, slots=True)
class Weight:
    labels: Tuple[Label, ...]

    # ------------------------------------------------------------------
    # Text form
    # ------------------------------------------------------------------
    @classmethod
    def parse(cls, text: str) -> Weight:
        labels = []
        for pos, ch in enumerate(text, start=1):
            try:
                labels.append(_BY_TEXT[ch])
            except KeyError:
                raise ParseError(f"Unknown weight label '{ch}' in '{text}'", position=pos) from None
        return cls(tuple(labels))

    @classmethod
    def coerce(cls, value: Weight | str) -> Weight:
        return value if isinstance(value, Weight) else cls.parse(value)

    def __str__(self) -> str:
        return "".join(label.value for label in self.labels)

    def __repr__(self) -> str:
        return f"Weight('{self}')"

    # ------------------------------------------------------------------
    # Sequence access (1-based)
    # ------------------------------------------------------------------
    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[Label]:
        return iter(self.labels)

    def at(self, i: int) -> Label:
        return self.labels[i - 1]

    @property
    def core_positions(self) -> Tuple[int, ...]:
        return tuple(i for i, lab in enumerate(self.labels, start=1) if lab.is_core)

    @property
    def down_positions(self) -> Tuple[int, ...]:
        return tuple(i for i, lab in enumerate(self.labels, start=1) if lab is Label.DOWN)

    @property
    def free_pattern(self) -> Tuple[Label | None, ...]:
        """The labels with every ∨/∧ blanked out; equal exactly within a block."""
        return tuple(lab if lab.is_free else None for lab in self.labels)

    @property
    def free_pattern_key(self) -> str:
        return "".join(lab.value if lab.is_free else "." for lab in self.labels)

    def count(self, label: Label) -> int:
        return self.labels.count(label)

    # ------------------------------------------------------------------
    # Relations and involutions
    # ------------------------------------------------------------------
    def equivalent(self, other: Weight) -> bool:
        """The ~ relation: same free pattern and same number of ∨'s."""
        return (self.free_pattern == other.free_pattern
                and self.count(Label.DOWN) == other.count(Label.DOWN))

    @property
    def order_key(self) -> Tuple[int, ...]:
        # colex on ∨ positions; orders a block as its decomposition matrix does
        return tuple(reversed(self.down_positions))

    def reversed_labels(self) -> Weight:
        """λ*: swap ∨ and ∧ at every vertex."""
        return Weight(tuple(lab.flipped() for lab in self.labels))

    def rotated(self) -> Weight:
        """λ↶: rotate the number line through 180 degrees."""
        return Weight(tuple(lab.flipped() for lab in reversed(self.labels)))

    def with_labels(self, changes: dict[int, Label]) -> Weight:
        labels = list(self.labels)
        for i, lab in changes.items():
            labels[i - 1] = lab
        return Weight(tuple(labels))

    def check_length(self, other: Weight) -> None:
        if len(self) != len(other):
            raise StructureError(
                f"Weights '{self}' and '{other}' live on number lines of different length")


def parse_weight(text: str) -> Weight:
    return Weight.parse(text)


def format_weight(weight: Weight) -> str:
    return str(weight)
