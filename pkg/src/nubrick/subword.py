"""The nu-subword complex ``SC(Q_nu, w_nu)``: facets, root and weight functions,
flips, definitional brick vectors and the Bruhat cone.

Facets are frozensets of 1-based word positions.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .coxeter import (
    GenWord,
    Permutation,
    Root,
    WeightVector,
    act_on_root,
    act_on_weight,
    bruhat_cover_up,
    bruhat_leq,
    demazure_product,
    evaluate,
    fundamental_weight,
    is_reduced,
    positive_roots,
    reflect,
    simple_root,
)
from .grid import FerrersRegion
from .trees import NuTree, min_tree

Facet = frozenset[int]


@dataclass(frozen=True)
class SubwordInstance:
    """A word ``Q`` in ``S_size`` together with a target element ``w``."""

    Q: GenWord
    w: Permutation

    @property
    def m(self) -> int:
        return len(self.Q)

    @property
    def size(self) -> int:
        return self.w.size

    @property
    def rank(self) -> int:
        return self.size - 1

    def complement(self, facet: Iterable[int]) -> GenWord:
        facet = set(facet)
        return tuple(self.Q[k - 1] for k in range(1, self.m + 1) if k not in facet)

    def is_facet(self, facet: Iterable[int]) -> bool:
        word = self.complement(facet)
        return is_reduced(word, self.size) and evaluate(word, self.size) == self.w

    @cached_property
    def demazure(self) -> Permutation:
        return demazure_product(self.Q, self.size)

    def delete(self, positions: Iterable[int]) -> SubwordInstance:
        """``Q`` with the letters at ``positions`` removed (same ``w``)."""
        return SubwordInstance(self.complement(positions), self.w)


def w_nu(region: FerrersRegion) -> Permutation:
    """Product of the letters outside the minimal tree, in word order."""
    facet = tree_facet(min_tree(region), region)
    word = tuple(q for k, q in enumerate(region.word, start=1) if k not in facet)
    return evaluate(word, region.size)


def nu_instance(region: FerrersRegion) -> SubwordInstance:
    return SubwordInstance(region.word, w_nu(region))


def tree_facet(tree: NuTree, region: FerrersRegion) -> Facet:
    return frozenset(region.position[p] for p in tree.nodes)


def facet_tree(facet: Iterable[int], region: FerrersRegion) -> NuTree:
    facet = frozenset(facet)
    inst = nu_instance(region)
    if not inst.is_facet(facet):
        raise ValueError(f"{sorted(facet)} is not a facet of the nu-subword complex")
    return NuTree.of(region.point_at(k) for k in facet)


def prefix_product(inst: SubwordInstance, facet: Iterable[int], k: int) -> Permutation:
    """Product of the letters at positions ``1..k-1`` outside ``facet``."""
    if not 1 <= k <= inst.m:
        raise ValueError(f"position {k} out of range 1..{inst.m}")
    facet = set(facet)
    return evaluate([inst.Q[j - 1] for j in range(1, k) if j not in facet], inst.size)


def root_function(inst: SubwordInstance, facet: Iterable[int], k: int) -> Root:
    return act_on_root(prefix_product(inst, facet, k), simple_root(inst.Q[k - 1]))


def weight_function(inst: SubwordInstance, facet: Iterable[int], k: int) -> WeightVector:
    w = prefix_product(inst, facet, k)
    return act_on_weight(w, fundamental_weight(inst.Q[k - 1], inst.size))


def root_configuration(inst: SubwordInstance, facet: Iterable[int]) -> dict[int, Root]:
    """Position -> root over the facet (a multiset keyed by position)."""
    return {k: root_function(inst, facet, k) for k in sorted(facet)}


def flip_partner(inst: SubwordInstance, facet: Iterable[int], k: int) -> int | None:
    """The unique position ``k'`` with ``I - {k} + {k'}`` a facet, if any."""
    facet = frozenset(facet)
    if k not in facet:
        raise ValueError(f"position {k} is not in the facet")
    partners = [
        j for j in range(1, inst.m + 1)
        if j not in facet and inst.is_facet((facet - {k}) | {j})
    ]
    if len(partners) > 1:
        raise AssertionError(f"flip at {k} is not unique: {partners}")
    return partners[0] if partners else None


def flip(inst: SubwordInstance, facet: Iterable[int], k: int) -> Facet:
    facet = frozenset(facet)
    j = flip_partner(inst, facet, k)
    if j is None:
        raise ValueError(f"position {k} is not flippable")
    return (facet - {k}) | {j}


def is_increasing_flip(inst: SubwordInstance, facet: Iterable[int], k: int) -> bool:
    """Increasing iff the partner sits to the right of ``k``; equivalently the
    root ``r(I, k)`` is positive."""
    return root_function(inst, facet, k).is_positive


def brick_vector_def(inst: SubwordInstance, facet: Iterable[int]) -> tuple[int, ...]:
    """``-sum_k omega(I, k)`` over all positions of the word."""
    facet = frozenset(facet)
    total = [0] * inst.size
    for k in range(1, inst.m + 1):
        for i, v in enumerate(weight_function(inst, facet, k)):
            total[i] -= v
    return tuple(total)


def bruhat_cone(inst: SubwordInstance) -> list[Root]:
    """Positive roots ``beta`` with ``w < s_beta w <= Dem(Q)`` (generators, sorted)."""
    dem = inst.demazure
    return [
        beta for beta in positive_roots(inst.size)
        if bruhat_cover_up(inst.w, beta) and bruhat_leq(reflect(beta, inst.w), dem)
    ]
