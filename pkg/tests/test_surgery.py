import dataclasses
import itertools
from collections import Counter

import pytest

from core.algebra.diagram_algebra import basis_K
from core.diagrams.blocks import Block, iter_blocks
from core.diagrams.oriented import BasisDiagram
from core.diagrams.weights import Label
from core.exceptions import BlockMismatchError, ContractViolation, PreconditionError
from core.surgery.element import Element
from core.surgery.engine import default_order, multiply_closed, multiply_generalized
from core.surgery.stacked import StackedDiagram
from core.verify.base import composable_pairs

# every nonzero product of two basis vectors of K over the "^v" block
SMALL_TABLE = {
    ("e_uv", "e_uv"): "e_uv",
    ("e_uv", "a"): "a",
    ("a", "e_vu"): "a",
    ("b", "e_uv"): "b",
    ("b", "a"): "c",
    ("e_vu", "b"): "b",
    ("e_vu", "e_vu"): "e_vu",
    ("e_vu", "c"): "c",
    ("c", "e_vu"): "c",
}


def test_small_multiplication_table(k11):
    for (left, right) in itertools.product(k11, repeat=2):
        expected = SMALL_TABLE.get((left, right))
        got = k11[left] * k11[right]
        if expected is None:
            assert got == Element.zero(), (left, right, str(got))
        else:
            assert got == k11[expected], (left, right, str(got))


def test_merging_two_circles_in_h():
    x = BasisDiagram.parse("(1,4);(2,3)|v^v^|(1,2);(3,4)")
    y = BasisDiagram.parse("(1,2);(3,4)|v^v^|(1,4);(2,3)")
    assert multiply_generalized(x, y) == Element.parse(
        "+1·((1,4);(2,3)|v^v^|(1,4);(2,3)) +1·((1,4);(2,3)|^v^v|(1,4);(2,3))")


def test_product_through_lines():
    x = BasisDiagram.parse("(4,5);(3,6)|^v^v^v|(2,3);(4,5)")
    y = BasisDiagram.parse("(2,3);(4,5)|^v^^vv|(1,2)")
    trace = Counter()
    assert multiply_generalized(x, y, trace=trace) == Element.basis("(4,5);(3,6)|^v^^vv|(1,2)")
    assert trace["y⊗y"] == 1
    assert trace["1⊗y"] == 1


def test_mismatched_middle_gives_zero():
    x = BasisDiagram.parse("|^v|(1,2)")
    assert multiply_generalized(x, BasisDiagram.parse("|^v|")) == Element.zero()


def test_different_blocks_are_rejected():
    with pytest.raises(BlockMismatchError):
        multiply_generalized(BasisDiagram.parse("|^v|"), BasisDiagram.parse("|^^v|"))


def test_surgery_order_is_checked():
    x = BasisDiagram.parse("(1,4);(2,3)|v^v^|(1,2);(3,4)")
    y = BasisDiagram.parse("(1,2);(3,4)|v^v^|(1,4);(2,3)")
    with pytest.raises(ContractViolation):
        multiply_generalized(x, y, order=[(1, 2)])


def test_every_surgery_order_gives_the_same_product():
    for block in iter_blocks(4):
        basis = basis_K(block)
        for x in basis:
            for y in basis:
                if x.cap.mirror() != y.cup:
                    continue
                middle = StackedDiagram.stack(x, y).middle
                expected = multiply_generalized(x, y)
                for order in itertools.permutations(middle):
                    assert multiply_generalized(x, y, order=order) == expected


def test_products_are_homogeneous():
    basis = basis_K(Block.of("vv^^"))
    for x in basis:
        for y in basis:
            for z, _ in multiply_generalized(x, y):
                assert z.degree == x.degree + y.degree


def test_closed_product_needs_closed_diagrams():
    with pytest.raises(PreconditionError):
        multiply_closed(BasisDiagram.parse("|^v|"), BasisDiagram.parse("|^v|"))


def test_stacking_and_cutting():
    stacked = StackedDiagram.stack(BasisDiagram.parse("|^v|(1,2)"), BasisDiagram.parse("(1,2)|v^|"))
    assert stacked.middle == ((1, 2),)
    with pytest.raises(ContractViolation):
        stacked.cut((2, 3))
    assert StackedDiagram.stack(BasisDiagram.parse("|^v|"), BasisDiagram.parse("|^v|")).middle == ()


def test_cutting_updates_components_like_a_rebuild():
    for block in iter_blocks(5):
        for x, y in composable_pairs(basis_K(block)):
            s = StackedDiagram.stack(x, y)
            for pair in default_order(s.middle):
                s = s.cut(pair)
                rebuilt = dataclasses.replace(s)
                assert all(s.component_of(n) == rebuilt.component_of(n) for n in s.nodes)


def test_relabelling_keeps_components():
    x = BasisDiagram.parse("(1,4);(2,3)|v^v^|(1,2);(3,4)")
    y = BasisDiagram.parse("(1,2);(3,4)|v^v^|(1,4);(2,3)")
    s = StackedDiagram.stack(x, y).cut((1, 2))
    t = s.relabelled({(0, 1): Label.UP})
    assert t.lower[0] is Label.UP
    assert t.component_of((0, 1)) == dataclasses.replace(t).component_of((0, 1))
    assert len(t.component_of((0, 1))) == 8
