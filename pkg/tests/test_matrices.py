import numpy as np
import pytest

from core.diagrams.blocks import Block, iter_blocks
from core.diagrams.oriented import defect
from core.exceptions import BlockMismatchError
from core.inout.matrix_csv import matrix_to_csv, write_matrix_csv
from core.numeric.laurent import LaurentPoly
from core.reps.matrices import cartan_matrix, decomposition_matrix
from utils.matrix import integer_matrix, is_permutation_matrix, permutation_of, sum_of_squared_column_sums


def test_small_block_matrices():
    block = Block.of("v^")
    D = decomposition_matrix(block)
    C = cartan_matrix(block)
    assert [[str(p) for p in row] for row in D.rows] == [["1", "q"], ["0", "1"]]
    assert [[str(p) for p in row] for row in C.rows] == [["1+q^2", "q"], ["q", "1"]]


def test_triangularity_and_cartan_factorisation():
    for block in iter_blocks(5):
        D = decomposition_matrix(block)
        C = cartan_matrix(block)
        assert D.is_upper_unitriangular()
        assert C == D @ D.transpose()
        assert C.is_symmetric()
        for i, lam in enumerate(block):
            assert C[i, i].evaluate(1) == 2 ** defect(lam)
            assert C[i, i].coefficient(0) == 1


def test_evaluate_and_sympy():
    C = cartan_matrix(Block.of("v^"))
    assert np.array_equal(C.evaluate(1), np.array([[2, 1], [1, 1]]))
    assert C.to_sympy().shape == (2, 2)
    assert C.entry(Block.of("v^").members[0], Block.of("v^").members[1]) == LaurentPoly.parse("q")


def test_mismatched_product():
    with pytest.raises(BlockMismatchError):
        decomposition_matrix(Block.of("v^")) @ decomposition_matrix(Block.of("vv^^"))


def test_csv_output(tmp_path):
    D = decomposition_matrix(Block.of("v^"))
    assert matrix_to_csv(D) == ",v^,^v\nv^,1,q\n^v,0,1\n"
    path = tmp_path / "decomp.csv"
    write_matrix_csv(D, path)
    assert path.read_bytes() == b",v^,^v\nv^,1,q\n^v,0,1\n"


def test_matrix_helpers():
    M = integer_matrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    assert M.dtype == np.int64
    assert is_permutation_matrix(M)
    assert permutation_of(M) == [1, 2, 0]
    assert not is_permutation_matrix(integer_matrix([[1, 1], [0, 1]]))
    assert not is_permutation_matrix(integer_matrix([[2, 0], [0, 1]]))
    assert sum_of_squared_column_sums(integer_matrix([[1, 1], [0, 1]])) == 5
