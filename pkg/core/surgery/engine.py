# core/surgery/engine.py
"""
Surgery products of basis diagrams.

`multiply_generalized` works directly on diagrams with rays: stitch
matching rays, cut the middle cup/cap pairs one at a time re-orienting by
the Frobenius rules, then identify the two number lines.
`multiply_closed` is the same procedure restricted to closed diagrams.
"""
from __future__ import annotations

import logging
from collections import Counter
from typing import Callable, Iterable, List, Optional, Sequence

from core.diagrams.arcs import Arc
from core.diagrams.oriented import BasisDiagram
from core.diagrams.weights import Label
from core.exceptions import BlockMismatchError, ContractViolation, PreconditionError
from core.surgery.element import Element
from core.surgery.stacked import CircleType, StackedDiagram

logger = logging.getLogger(__name__)

ONE, X, LINE = CircleType.ONE, CircleType.X, CircleType.LINE


def _record(trace: Optional[Counter], rule: str) -> None:
    if trace is not None:
        trace[rule] += 1


def _ray_labels(s: StackedDiagram, component) -> set[Label]:
    return {s.label(node) for node, _ in s.ray_ends(component)}


def surgery_step(s: StackedDiagram, pair: Arc, trace: Optional[Counter] = None) -> List[StackedDiagram]:
    """
    Cut one middle cap/cup pair and re-orient. Returns zero, one or two
    stacked diagrams.
    """
    i, j = pair
    low = s.component_of((0, i))
    up = s.component_of((1, i))
    t = s.cut(pair)

    if low != up:
        kinds = (s.circle_type(low), s.circle_type(up))
        if kinds == (ONE, ONE):
            _record(trace, "1⊗1")
            return [t.relabelled(t.orient_circle(t.component_of((0, i)), ONE))]
        if kinds in ((ONE, X), (X, ONE)):
            _record(trace, "1⊗x")
            return [t.relabelled(t.orient_circle(t.component_of((0, i)), X))]
        if kinds == (X, X):
            _record(trace, "x⊗x")
            return []
        if kinds != (LINE, LINE):
            if X in kinds:
                _record(trace, "x⊗y")
                return []
            _record(trace, "1⊗y")
            return [t.relabelled(t.orient_line(t.component_of((0, i))))]
        ends = (_ray_labels(s, low), _ray_labels(s, up))
        if ends not in (({Label.UP}, {Label.DOWN}), ({Label.DOWN}, {Label.UP})):
            _record(trace, "y⊗y→0")
            return []
        _record(trace, "y⊗y")
        labels: dict = {}
        for part in {t.component_of(node) for node in low | up}:
            labels.update(t.orient_line(part))
        return [t.relabelled(labels)]

    kind = s.circle_type(low)
    left, right = t.component_of((0, i)), t.component_of((0, j))
    if kind is ONE:
        _record(trace, "1→1⊗x+x⊗1")
        first = dict(t.orient_circle(left, ONE))
        first.update(t.orient_circle(right, X))
        second = dict(t.orient_circle(left, X))
        second.update(t.orient_circle(right, ONE))
        return [t.relabelled(first), t.relabelled(second)]
    if kind is X:
        _record(trace, "x→x⊗x")
        labels = dict(t.orient_circle(left, X))
        labels.update(t.orient_circle(right, X))
        return [t.relabelled(labels)]
    _record(trace, "y→x⊗y")
    labels: dict = {}
    for part in (left, right):
        if t.ray_ends(part):
            labels.update(t.orient_line(part))
        else:
            labels.update(t.orient_circle(part, X))
    return [t.relabelled(labels)]


def default_order(pairs: Iterable[Arc]) -> List[Arc]:
    """Ascending right end: innermost first among nested pairs, left to right otherwise."""
    return sorted(pairs, key=lambda p: (p[1], p[0]))


def check_same_block(x: BasisDiagram, y: BasisDiagram) -> None:
    if len(x.weight) != len(y.weight) or not x.weight.equivalent(y.weight):
        raise BlockMismatchError(f"'{x}' and '{y}' belong to different blocks")


def multiply_generalized(x: BasisDiagram, y: BasisDiagram,
                         order: Optional[Sequence[Arc]] = None,
                         trace: Optional[Counter] = None) -> Element:
    """
    (aλb)(cμd): zero unless b* = c; otherwise stitch rays, run surgery on
    every middle pair (in `order` if given) and collapse.
    """
    check_same_block(x, y)
    if x.cap.mirror() != y.cup:
        return Element.zero()
    start = StackedDiagram.stack(x, y)
    steps = default_order(start.middle) if order is None else list(order)
    if sorted(steps) != sorted(start.middle):
        raise ContractViolation(f"Surgery order {steps} is not a permutation of {list(start.middle)}")

    current = [start]
    for pair in steps:
        nxt: List[StackedDiagram] = []
        for s in current:
            nxt.extend(surgery_step(s, pair, trace))
        current = nxt
        if not current:
            break
    result = Element((s.collapse(), 1) for s in current)
    logger.debug("%s * %s -> %d term(s)", x, y, len(result))
    return result


def multiply_closed(x: BasisDiagram, y: BasisDiagram, trace: Optional[Counter] = None) -> Element:
    """Khovanov's product on closed diagrams."""
    if not (x.is_closed and y.is_closed):
        raise PreconditionError(f"multiply_closed needs closed diagrams, got '{x}' and '{y}'")
    return multiply_generalized(x, y, trace=trace)


def bilinear(x: Element, y: Element,
             product: Callable[[BasisDiagram, BasisDiagram], Element]) -> Element:
    """Extend a product of basis diagrams to linear combinations."""
    acc: List = []
    for a, ca in x:
        for b, cb in y:
            acc.extend((z, ca * cb * cz) for z, cz in product(a, b))
    return Element(acc)


def multiply_elements(x: Element, y: Element, trace: Optional[Counter] = None) -> Element:
    return bilinear(x, y, lambda a, b: multiply_generalized(a, b, trace=trace))
