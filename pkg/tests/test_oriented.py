import pytest

from core.algebra.diagram_algebra import basis_K
from core.diagrams.arcs import ArcDiagram, Polarity, cup_diagram_of
from core.diagrams.blocks import Block, iter_blocks
from core.diagrams.oriented import (
    BasisDiagram, degree, half_degree, is_oriented, reorient, subset_rel,
)
from core.diagrams.weights import Weight
from core.exceptions import ParseError, StructureError


def test_canonical_cup_is_oriented_of_degree_zero():
    for block in iter_blocks(5):
        for lam in block:
            cup = cup_diagram_of(lam)
            assert is_oriented(cup, lam)
            assert half_degree(cup, lam) == 0


def test_clockwise_cup_has_degree_one():
    cup = ArcDiagram(2, [(1, 2)])
    assert is_oriented(cup, Weight.parse("^v"))
    assert half_degree(cup, Weight.parse("^v")) == 1
    assert half_degree(cup, Weight.parse("v^")) == 0
    assert not is_oriented(cup, Weight.parse("vv"))


def test_rays_must_not_read_down_then_up():
    rays = ArcDiagram(2, [], [1, 2])
    assert is_oriented(rays, Weight.parse("^v"))
    assert not is_oriented(rays, Weight.parse("v^"))


def test_reorient_recovers_unique_weight_below():
    for block in iter_blocks(5):
        for lam in block:
            for alpha in block:
                cup = cup_diagram_of(alpha)
                if not is_oriented(cup, lam):
                    continue
                under = [w for w in block if cup_diagram_of(w) == cup and subset_rel(w, lam)]
                assert under == [reorient(cup, lam)] == [alpha]


def test_parse_and_print():
    x = BasisDiagram.parse("(1,4);(2,3)|v^v^|(1,2);(3,4)")
    assert str(x) == "(1,4);(2,3)|v^v^|(1,2);(3,4)"
    assert x.cap.polarity is Polarity.CAP
    assert degree(x) == 1
    assert x.cup_weight == Weight.parse("vv^^")
    assert x.cap_weight == Weight.parse("v^v^")


@pytest.mark.parametrize("text", ["(1,2)|vv|", "|v^|", "(1,2)|^o|"])
def test_unoriented_diagrams_are_rejected(text):
    with pytest.raises(StructureError):
        BasisDiagram.parse(text)


def test_parse_needs_three_parts():
    with pytest.raises(ParseError):
        BasisDiagram.parse("(1,2)|v^")


def test_degrees_over_small_block():
    degrees = sorted(x.degree for x in basis_K(Block.of("^v")))
    assert degrees == [0, 0, 1, 1, 2]


def test_star_and_rotation():
    x = BasisDiagram.parse("(1,2)|^vo|")
    assert str(x.star()) == "|^vo|(1,2)"
    assert str(x.rotated()) == "|o^v|(2,3)"
    assert x.rotated().degree == x.degree
