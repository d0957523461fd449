import pytest

from core.algebra.diagram_algebra import basis_K
from core.diagrams.arcs import cup_diagram_of
from core.diagrams.blocks import Block, iter_blocks
from core.diagrams.oriented import defect
from core.diagrams.weights import Weight
from core.exceptions import BlockMismatchError
from core.numeric.laurent import LaurentPoly
from core.reps.matrices import decomposition_matrix
from core.reps.modules import CellModule, ProjectiveModule, SimpleModule, cell_module, projective_filtration
from core.reps.truncation import truncate_to_H
from core.surgery.element import Element


def w(text: str) -> Weight:
    return Weight.parse(text)


def test_cell_module_of_small_block():
    cell = cell_module(w("^v"))
    assert [str(x) for x in cell.weights] == ["v^", "^v"]
    assert cell.graded_dimension() == LaurentPoly.parse("1+q")
    assert str(cell.layers()) == "V(^v): ^v<0>, v^<1>"
    assert cell.degree_of(cup_diagram_of(w("v^"))) == 1


def test_cell_action():
    cell = CellModule(w("^v"))
    rays, cup = cup_diagram_of(w("^v")), cup_diagram_of(w("v^"))
    assert cell.act(Element.basis("(1,2)|^v|"), {rays: 1}) == {cup: 1}
    assert cell.act(Element.basis("|^v|(1,2)"), {rays: 1}) == {}
    with pytest.raises(BlockMismatchError):
        cell.act(Element.basis("|^^v|"), {rays: 1})


def test_cell_module_law_on_small_blocks():
    for block in iter_blocks(3):
        basis = basis_K(block)
        for mu in block:
            cell = CellModule(mu, block)
            for c in cell.basis:
                for x in basis:
                    for y in basis:
                        ex, ey = Element.basis(x), Element.basis(y)
                        assert cell.act(ex * ey, {c: 1}) == cell.act(ex, cell.act(ey, {c: 1}))


def test_layers_match_decomposition_columns():
    for block in iter_blocks(5):
        D = decomposition_matrix(block)
        for mu in block:
            assert CellModule(mu, block).graded_dimension() == sum(D.column(mu), LaurentPoly.zero())


def test_projective_of_small_block():
    proj = ProjectiveModule(w("v^"))
    assert proj.graded_dimension() == LaurentPoly.parse("1+q+q^2")
    assert str(proj.filtration()) == "P(v^): ^v<1>, v^<0>"


def test_projective_filtrations():
    for block in iter_blocks(5):
        for lam in block:
            filt = projective_filtration(lam, block)
            assert len(filt) == 2 ** defect(lam)
            assert filt.sections[-1] == (lam, 0)
            total = LaurentPoly.zero()
            for mu, shift in filt:
                total = total + LaurentPoly.monomial(shift) * CellModule(mu, block).graded_dimension()
            assert ProjectiveModule(lam, block).graded_dimension() == total


def test_truncation():
    small = Block.of("^v")
    assert str(truncate_to_H(small, CellModule(w("^v")))) == "eV(^v): q"
    assert truncate_to_H(small, ProjectiveModule(w("v^"))).graded_dimension == LaurentPoly.parse("1+q^2")
    assert truncate_to_H(small, SimpleModule(w("v^"))).graded_dimension == LaurentPoly.one()
    assert truncate_to_H(small, SimpleModule(w("^v"))).is_zero
    with pytest.raises(BlockMismatchError):
        truncate_to_H(Block.of("vv^^"), CellModule(w("^v")))
