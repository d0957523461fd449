import itertools

import pytest
import sympy as sp

from core.diagrams.blocks import Block, bruhat_leq, bruhat_leq_generative, iter_blocks
from core.diagrams.oriented import defect, subset_rel
from core.diagrams.weights import Weight
from core.exceptions import BlockMismatchError, StructureError


def test_block_order_matches_decomposition_matrix():
    assert [str(w) for w in Block.of("vv^^")] == ["vv^^", "v^v^", "^vv^", "v^^v", "^v^v", "^^vv"]


def test_block_of_any_member_is_the_same():
    assert Block.of("^v^v") == Block.of("vv^^")
    assert len(Block.of("xv^o")) == 2


def test_require_rejects_outsiders():
    with pytest.raises(BlockMismatchError):
        Block.of("v^").require(Weight.parse("vv"))


def test_defect_and_maximal_defect_subset():
    block = Block.of("vv^^")
    assert block.defect == 2
    assert [str(w) for w in block.maximal_defect_subset()] == ["vv^^", "v^v^"]
    assert Block.of("vvv^").defect == 1


@pytest.mark.parametrize("n", range(1, 7))
def test_catalan_counts(n):
    block = Block.of("v" * n + "^" * n)
    assert len(block.maximal_defect_subset()) == sp.catalan(n)


def test_supersets_count_is_two_to_the_defect():
    for block in iter_blocks(5):
        for lam in block:
            assert len(block.supersets(lam)) == 2 ** defect(lam)


def test_supersets_of_small_weight():
    assert [str(w) for w in Block.of("v^").supersets(Weight.parse("v^"))] == ["v^", "^v"]


def test_bruhat_prefix_rule_matches_swaps():
    for block in iter_blocks(5, include_free=False):
        for lam, mu in itertools.product(block, repeat=2):
            assert bruhat_leq(lam, mu) == bruhat_leq_generative(block, lam, mu)


def test_bruhat_examples():
    assert bruhat_leq(Weight.parse("v^"), Weight.parse("^v"))
    assert not bruhat_leq(Weight.parse("^v"), Weight.parse("v^"))
    assert not bruhat_leq(Weight.parse("vv"), Weight.parse("^^"))
    with pytest.raises(StructureError):
        bruhat_leq(Weight.parse("v"), Weight.parse("v^"))


def test_subset_implies_bruhat():
    for block in iter_blocks(5):
        for lam, mu in itertools.product(block, repeat=2):
            if subset_rel(lam, mu):
                assert bruhat_leq(lam, mu)


def test_iter_blocks_sizes():
    blocks = list(iter_blocks(2))
    # n=0: one block; n=1: o, x, v, ^; n=2: every pattern over {o,x,*}
    assert blocks[0].size == 0
    assert sum(1 for b in blocks if b.size == 1) == 4
    assert len(set(blocks)) == len(blocks)
