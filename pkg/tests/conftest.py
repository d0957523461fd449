import pytest

from core.diagrams.blocks import Block
from core.surgery.element import Element


@pytest.fixture
def small_block() -> Block:
    """The block of "^v": two weights, five basis diagrams."""
    return Block.of("^v")


@pytest.fixture
def k11() -> dict[str, Element]:
    """Named basis elements of K over the block of "^v"."""
    return {
        "e_uv": Element.basis("|^v|"),
        "a": Element.basis("|^v|(1,2)"),
        "b": Element.basis("(1,2)|^v|"),
        "e_vu": Element.basis("(1,2)|v^|(1,2)"),
        "c": Element.basis("(1,2)|^v|(1,2)"),
    }
