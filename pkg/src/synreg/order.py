"""Containment between modelling structures and the resulting posets.

A structure is contained in another when its constructor skeleton embeds
into the other's, or, where the skeletons coincide, when its full shape
embeds (which captures pure arity growth such as a binary intersection
inside a ternary one).  Frame structures compare by multiset inclusion.
Both relations are reflexive and transitive, and antisymmetric on distinct
structures because an embedding never shrinks a tree.

``build_poset`` evaluates the relation pairwise, checks it is acyclic over
distinct elements, and reduces it to the Hasse diagram, reporting depth
(nodes on a longest chain) and maximal branching.  Pairwise comparison is
quadratic, so construction takes a time budget and raises
``PosetTimeout`` when it runs out.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Sequence, Union

import networkx as nx

from .abstraction import (
    StructureMultiset,
    ground_generalisation,
    internal_tree_structure,
)
from .tree import Tree

DEFAULT_BUDGET = 3600.0

Structure = Union[Tree, StructureMultiset]


class PosetTimeout(Exception):
    """Poset construction exceeded its time budget."""


class PosetConsistencyError(Exception):
    """The computed relation is cyclic over distinct structures."""


def tree_embeds(small: Tree, big: Tree, *, rooted: bool = False) -> bool:
    """Does ``small`` map injectively into ``big``?

    The map must preserve node labels, edge tags, and the parent-child
    relation.  By default the image may be rooted anywhere in ``big``;
    ``rooted=True`` pins the roots together.

    Works bottom-up: a node pair is checked by injectively assigning each
    child of ``small``'s node to a distinct compatible child of ``big``'s,
    via augmenting paths over the recursive results.  Results are memoised
    per subtree pair, so repeated shapes cost nothing extra.
    """
    memo: dict[tuple[str, str], bool] = {}

    def at(u: Tree, v: Tree) -> bool:
        if u.label != v.label:
            return False
        if len(u.children) > len(v.children):
            return False
        key = (u.encoding, v.encoding)
        cached = memo.get(key)
        if cached is None:
            cached = _assign_children(u.children, v.children, at)
            memo[key] = cached
        return cached

    if rooted:
        return at(small, big)
    return any(at(small, v) for v in _subtrees(big))


def _subtrees(t: Tree):
    yield t
    for _, c in t.children:
        yield from _subtrees(c)


def _assign_children(
    need: tuple[tuple[str, Tree], ...],
    have: tuple[tuple[str, Tree], ...],
    at: Callable[[Tree, Tree], bool],
) -> bool:
    """Match every needed (tag, child) to a distinct compatible target."""
    owner: list[int] = [-1] * len(have)

    def place(i: int, visited: set[int]) -> bool:
        tag, child = need[i]
        for j, (tag2, child2) in enumerate(have):
            if j in visited or tag2 != tag or not at(child, child2):
                continue
            visited.add(j)
            if owner[j] < 0 or place(owner[j], visited):
                owner[j] = i
                return True
        return False

    return all(place(i, set()) for i in range(len(need)))


def axiom_contains(t: Tree, t2: Tree) -> bool:
    """Is the structure of ``t`` contained in that of ``t2``?

    Arguments may be concrete axioms or their ground generalisations; both
    views are recomputed here, and the two are interchangeable because
    abstraction is idempotent.
    """
    skeleton, skeleton2 = internal_tree_structure(t), internal_tree_structure(t2)
    if skeleton == skeleton2:
        return tree_embeds(ground_generalisation(t), ground_generalisation(t2))
    return tree_embeds(skeleton, skeleton2)


def frame_contains(c: StructureMultiset, c2: StructureMultiset) -> bool:
    """Multiset inclusion: every structure of ``c`` occurs at least as often in ``c2``."""
    return all(
        c2.multiplicity(enc) >= m for enc, (_, m) in c.entries.items()
    )


@dataclass(frozen=True)
class StructurePoset:
    """A containment poset over pairwise-distinct structures.

    ``relation`` holds index pairs (i, j) with element i contained in
    element j, reflexive pairs included; ``hasse_edges`` is its transitive
    reduction, pointing from smaller to larger.  ``depth`` counts the nodes
    on a longest chain (1 for a non-empty antichain, 0 when empty) and
    ``max_branching`` is the largest number of covers of any element.
    """

    elements: tuple[Structure, ...]
    relation: frozenset[tuple[int, int]]
    hasse_edges: frozenset[tuple[int, int]]
    depth: int
    max_branching: int


def build_poset(
    structures: Sequence[Structure],
    kind: str,
    *,
    budget: float | None = DEFAULT_BUDGET,
) -> StructurePoset:
    """Order ``structures`` by containment and reduce to the Hasse diagram.

    ``kind`` selects the relation: ``"axiom"`` for structure trees,
    ``"frame"`` for frame multisets.  Elements must be pairwise distinct by
    encoding.  ``budget`` is in seconds; ``None`` disables the limit.
    """
    elements = tuple(structures)
    encodings = [s.encoding for s in elements]
    if len(set(encodings)) != len(encodings):
        raise ValueError("structures must be pairwise distinct")
    if kind == "axiom":
        skeletons = [internal_tree_structure(s) for s in elements]
        grounds = [ground_generalisation(s) for s in elements]

        def contained(i: int, j: int) -> bool:
            if skeletons[i] == skeletons[j]:
                return tree_embeds(grounds[i], grounds[j])
            return tree_embeds(skeletons[i], skeletons[j])

    elif kind == "frame":

        def contained(i: int, j: int) -> bool:
            return frame_contains(elements[i], elements[j])

    else:
        raise ValueError(f"unknown poset kind: {kind!r}")

    deadline = None if budget is None else time.monotonic() + budget
    n = len(elements)
    strict: set[tuple[int, int]] = set()
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if deadline is not None and time.monotonic() > deadline:
                raise PosetTimeout(
                    f"ran out of budget after {len(strict)} pairs"
                )
            if contained(i, j):
                strict.add((i, j))
    for i, j in strict:
        if (j, i) in strict:
            raise PosetConsistencyError(
                f"containment cycle between distinct structures "
                f"{encodings[i]} and {encodings[j]}"
            )
    graph = nx.DiGraph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(strict)
    reduced = nx.transitive_reduction(graph)
    depth = nx.dag_longest_path_length(reduced) + 1 if n else 0
    branching = max((d for _, d in reduced.out_degree()), default=0)
    relation = frozenset({(i, i) for i in range(n)} | strict)
    return StructurePoset(
        elements=elements,
        relation=relation,
        hasse_edges=frozenset(reduced.edges()),
        depth=depth,
        max_branching=branching,
    )
