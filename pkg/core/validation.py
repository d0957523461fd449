# core/validation.py
"""
Structural validation utilities for arcalg.
Checks that cup/cap arc data is a planar partial matching and that a
cup diagram, weight and cap diagram fit together.
"""
from typing import List, Sequence, Tuple

from core.exceptions import StructureError


def validate_arc_layout(size: int, arcs: Sequence[Tuple[int, int]], rays: Sequence[int]) -> None:
    """
    Sanity checks on the arcs and rays of one half of a diagram.

    Raises:
        StructureError listing every problem found.
    """
    problems: List[str] = []
    used: dict[int, str] = {}

    for i, j in arcs:
        if not (1 <= i < j <= size):
            problems.append(f"arc ({i},{j}) is not an ordered pair inside 1..{size}")
            continue
        for end in (i, j):
            if end in used:
                problems.append(f"vertex {end} used by {used[end]} and arc ({i},{j})")
            used[end] = f"arc ({i},{j})"
    for r in rays:
        if not 1 <= r <= size:
            problems.append(f"ray at {r} lies outside 1..{size}")
        elif r in used:
            problems.append(f"vertex {r} used by {used[r]} and a ray")
        else:
            used[r] = "a ray"

    ordered = sorted(arcs)
    for n, (i, j) in enumerate(ordered):
        for k, l in ordered[n + 1:]:
            if k > j:
                break
            if i < k < j < l:
                problems.append(f"arcs ({i},{j}) and ({k},{l}) cross")
        for r in rays:
            if i < r < j:
                problems.append(f"ray at {r} lies under arc ({i},{j})")

    if problems:
        raise StructureError("Invalid arc diagram: " + "; ".join(problems))


def validate_free_positions(size: int, diagram_free: Sequence[int], weight_free: Sequence[int], what: str) -> None:
    """The free vertices of a half-diagram must be exactly the ∘/× vertices of its weight."""
    if tuple(diagram_free) != tuple(weight_free):
        raise StructureError(
            f"{what}: free vertices {list(diagram_free)} do not match the "
            f"weight's ∘/× vertices {list(weight_free)} on a line of {size}")
