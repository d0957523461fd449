# core/inout/render.py
"""
Plain-text pictures of circle diagrams: caps above the number line, the
weight on it, cups below. The first line of every picture is the diagram
in its text form.
"""
from __future__ import annotations

from typing import Dict, List

from core.diagrams.arcs import Arc, ArcDiagram
from core.diagrams.oriented import BasisDiagram
from core.surgery.element import Element

SPACING = 4


def _col(i: int) -> int:
    return SPACING * (i - 1)


def _depths(arcs: tuple[Arc, ...]) -> Dict[Arc, int]:
    depth: Dict[Arc, int] = {}
    for arc in sorted(arcs, key=lambda a: a[1] - a[0]):
        inside = [depth[o] for o in depth if arc[0] < o[0] and o[1] < arc[1]]
        depth[arc] = 1 + max(inside, default=0)
    return depth


def _band(diagram: ArcDiagram, width: int, left: str, right: str) -> List[str]:
    """Rows ordered from the number line outward."""
    depth = _depths(diagram.arcs)
    height = max(depth.values(), default=1 if diagram.rays else 0)
    rows = []
    for r in range(1, height + 1):
        row = [" "] * width
        for (i, j), d in depth.items():
            if r == d:
                row[_col(i)] = left
                row[_col(j)] = right
                for c in range(_col(i) + 1, _col(j)):
                    row[c] = "─"
            elif r < d:
                row[_col(i)] = row[_col(j)] = "│"
        for ray in diagram.rays:
            row[_col(ray)] = "│"
        rows.append("".join(row).rstrip())
    return rows


def render_diagram(x: BasisDiagram) -> str:
    width = max(_col(x.size) + 1, 1)
    line = [" "] * width
    for i, lab in enumerate(x.weight.labels, start=1):
        line[_col(i)] = lab.value
    caps = _band(x.cap, width, "╭", "╮")
    cups = _band(x.cup, width, "╰", "╯")
    return "\n".join(list(reversed(caps)) + ["".join(line).rstrip()] + cups)


def render_ascii(x: BasisDiagram | Element) -> str:
    if isinstance(x, BasisDiagram):
        return f"{x}\n{render_diagram(x)}\n"
    if not x:
        return "0\n"
    parts = [f"{c:+d}·({b})\n{render_diagram(b)}\n" for b, c in x]
    return "\n".join(parts)
