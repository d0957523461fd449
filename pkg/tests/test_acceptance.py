"""
End-to-end checks on the worked blocks, timed with pytest-benchmark, plus
the exhaustive checks over larger blocks (marked slow).
"""
import itertools
import random

import pytest

from calculator import main
from core.algebra.diagram_algebra import AlgebraKind, DiagramAlgebra, basis_H, basis_K, hash_involution, tau
from core.diagrams.blocks import Block, bruhat_leq, iter_blocks
from core.diagrams.oriented import defect, subset_rel
from core.numeric.laurent import LaurentPoly
from core.reps.matrices import cartan_matrix, decomposition_matrix
from core.reps.modules import CellModule, ProjectiveModule, projective_filtration
from core.surgery.closure import multiply_via_closure
from core.surgery.element import Element
from core.surgery.engine import multiply_generalized
from core.surgery.stacked import StackedDiagram
from core.verify.base import by_cup, composable_pairs
from utils.matrix import integer_matrix, is_permutation_matrix, permutation_of


def _small_table():
    algebra = DiagramAlgebra("^v")
    return {(x, y): algebra.multiply_basis(x, y) for x, y in itertools.product(algebra.basis, repeat=2)}


def test_small_table_benchmark(benchmark):
    table = benchmark(_small_table)
    assert len(table) == 25
    assert sum(1 for v in table.values() if v) == 9


def test_h_of_two_cups_benchmark(benchmark):
    block = Block.of("vv^^")
    basis = benchmark(basis_H, block)
    assert len(basis) == 12
    assert len(basis_K(block)) == 47


def test_decomposition_matrix_benchmark(benchmark):
    D = benchmark(decomposition_matrix, Block.of("vvv^^^"))
    assert D.is_upper_unitriangular()
    assert len(D) == 20


@pytest.mark.slow
def test_random_associativity_three_cups():
    algebra = DiagramAlgebra("vvv^^^")
    basis = algebra.basis
    index = by_cup(basis)
    rng = random.Random(20080101)
    for _ in range(10_000):
        x = rng.choice(basis)
        y = rng.choice(index[x.cap.mirror()])
        z = rng.choice(index[y.cap.mirror()])
        left = algebra.multiply(algebra.multiply_basis(x, y), Element.basis(z))
        right = algebra.multiply(Element.basis(x), algebra.multiply_basis(y, z))
        assert left == right


@pytest.mark.slow
def test_counts_up_to_eight_vertices():
    for block in iter_blocks(8, include_free=False):
        for lam in block:
            tops = block.supersets(lam)
            assert len(tops) == 2 ** defect(lam)
            for mu in tops:
                assert bruhat_leq(lam, mu) and subset_rel(lam, mu)


@pytest.mark.slow
def test_h_dimensions_up_to_six_vertices():
    for block in iter_blocks(6, include_free=False):
        algebra = DiagramAlgebra(block, AlgebraKind.H)
        assert len(algebra.basis) == sum(
            len([a for a in block.subsets(lam) if defect(a) == block.defect]) ** 2 for lam in block)


@pytest.mark.slow
def test_surgery_matches_closure_up_to_six_vertices():
    for block in iter_blocks(6):
        for x, y in composable_pairs(basis_K(block)):
            assert multiply_generalized(x, y) == multiply_via_closure(x, y), (str(x), str(y))


@pytest.mark.slow
def test_surgery_order_is_irrelevant_up_to_five_vertices():
    for block in iter_blocks(5):
        for x, y in composable_pairs(basis_K(block)):
            expected = multiply_generalized(x, y)
            for order in itertools.permutations(StackedDiagram.stack(x, y).middle):
                assert multiply_generalized(x, y, order=order) == expected


@pytest.mark.slow
def test_cartan_factorisation_up_to_eight_vertices():
    for block in iter_blocks(8):
        D = decomposition_matrix(block)
        assert D.is_upper_unitriangular()
        assert cartan_matrix(block) == D @ D.transpose()


@pytest.mark.slow
def test_gram_matrix_up_to_six_vertices():
    for block in iter_blocks(6):
        basis = basis_H(block)
        M = integer_matrix([[tau(multiply_generalized(x, y)) for y in basis] for x in basis])
        assert is_permutation_matrix(M)
        assert permutation_of(M) == [basis.index(hash_involution(x)) for x in basis]
        for x in basis:
            assert hash_involution(x).degree == 2 * block.defect - x.degree


@pytest.mark.slow
def test_projective_filtrations_up_to_eight_vertices():
    for block in iter_blocks(8):
        for lam in block:
            filt = projective_filtration(lam, block)
            assert filt.sections[-1] == (lam, 0)
            total = LaurentPoly.zero()
            for mu, shift in filt:
                total = total + LaurentPoly.monomial(shift) * CellModule(mu, block).graded_dimension()
            assert ProjectiveModule(lam, block).graded_dimension() == total


@pytest.mark.slow
def test_verify_all_suites_up_to_five_vertices(capsys):
    assert main(["verify", "--suite", "all", "--max-vertices", "5"]) == 0
    assert capsys.readouterr().out.endswith("result: PASS\n")
