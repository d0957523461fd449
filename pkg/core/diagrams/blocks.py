# core/diagrams/blocks.py
"""
Blocks: equivalence classes of weights under moving ∨'s and ∧'s around,
the Bruhat order on them, and the maximal-defect subset Λ°.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Tuple

import networkx as nx

from core.diagrams.oriented import defect, subset_rel
from core.diagrams.weights import Label, Weight
from core.exceptions import BlockMismatchError


@dataclass(frozen=True, slots=True)
class Block:
    """All weights equivalent to a representative, smallest first."""
    members: Tuple[Weight, ...]

    @classmethod
    def of(cls, weight: Weight | str) -> Block:
        return enumerate_block(Weight.coerce(weight))

    @property
    def representative(self) -> Weight:
        return self.members[0]

    @property
    def size(self) -> int:
        """Number of vertices on the number line."""
        return len(self.members[0])

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Weight]:
        return iter(self.members)

    def __contains__(self, weight: object) -> bool:
        return isinstance(weight, Weight) and weight.equivalent(self.representative) \
            and len(weight) == self.size

    def __str__(self) -> str:
        return str(self.representative)

    def index(self, weight: Weight) -> int:
        self.require(weight)
        return self.members.index(weight)

    def require(self, weight: Weight) -> None:
        if weight not in self:
            raise BlockMismatchError(f"Weight '{weight}' is not in the block of '{self}'")

    # ------------------------------------------------------------------
    # Defect
    # ------------------------------------------------------------------
    @property
    def defect(self) -> int:
        """def(Λ) = min(#∨, #∧)."""
        rep = self.representative
        return min(rep.count(Label.DOWN), rep.count(Label.UP))

    def maximal_defect_subset(self) -> Tuple[Weight, ...]:
        """Λ°, in block order."""
        top = self.defect
        return tuple(w for w in self.members if defect(w) == top)

    def supersets(self, weight: Weight) -> Tuple[Weight, ...]:
        """All μ ⊃ λ, in block order."""
        return tuple(mu for mu in self.members if subset_rel(weight, mu))

    def subsets(self, weight: Weight) -> Tuple[Weight, ...]:
        """All α ⊂ λ, in block order."""
        return tuple(alpha for alpha in self.members if subset_rel(alpha, weight))

    # ------------------------------------------------------------------
    # Bruhat order, generative form
    # ------------------------------------------------------------------
    def bruhat_graph(self) -> nx.DiGraph:
        """Edges λ → λ' for every swap of a ∨ with an ∧ somewhere to its right."""
        graph = nx.DiGraph()
        graph.add_nodes_from(self.members)
        for lam in self.members:
            core = lam.core_positions
            for a, b in itertools.combinations(core, 2):
                if lam.at(a) is Label.DOWN and lam.at(b) is Label.UP:
                    graph.add_edge(lam, lam.with_labels({a: Label.UP, b: Label.DOWN}))
        return graph


@lru_cache(maxsize=4096)
def enumerate_block(weight: Weight) -> Block:
    core = weight.core_positions
    downs = weight.count(Label.DOWN)
    members = []
    for chosen in itertools.combinations(core, downs):
        picked = set(chosen)
        members.append(weight.with_labels(
            {i: (Label.DOWN if i in picked else Label.UP) for i in core}))
    members.sort(key=lambda w: w.order_key)
    return Block(tuple(members))


def bruhat_leq(lam: Weight, mu: Weight) -> bool:
    """
    λ ≤ μ iff λ ~ μ and every prefix of λ holds at least as many ∨'s as the
    same prefix of μ.
    """
    lam.check_length(mu)
    if not lam.equivalent(mu):
        return False
    balance = 0
    for a, b in zip(lam.labels, mu.labels):
        balance += (a is Label.DOWN) - (b is Label.DOWN)
        if balance < 0:
            return False
    return True


def bruhat_leq_generative(block: Block, lam: Weight, mu: Weight) -> bool:
    """Reachability by ∨/∧ swaps; exponential, used to validate `bruhat_leq`."""
    block.require(lam)
    block.require(mu)
    return nx.has_path(block.bruhat_graph(), lam, mu)


def maximal_defect_subset(block: Block) -> Tuple[Weight, ...]:
    return block.maximal_defect_subset()


def iter_blocks(max_vertices: int, include_free: bool = True) -> Iterator[Block]:
    """
    Every block on number lines of 0..max_vertices vertices, smallest lines
    first. Without `include_free` only weights made of ∨'s and ∧'s appear.
    """
    alphabet = ("o", "x", "*") if include_free else ("*",)
    for n in range(max_vertices + 1):
        for pattern in itertools.product(alphabet, repeat=n):
            slots = pattern.count("*")
            for downs in range(slots + 1):
                fill = iter("v" * downs + "^" * (slots - downs))
                text = "".join(next(fill) if ch == "*" else ch for ch in pattern)
                yield enumerate_block(Weight.parse(text))
