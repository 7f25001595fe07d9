"""Abstractions that map concrete axiom trees onto modelling structures.

Two are provided.  ``ground_generalisation`` keeps the whole tree shape but
forgets which entities occur, replacing every leaf with the placeholder
``*``.  ``internal_tree_structure`` goes further and deletes the leaves,
keeping only the constructor skeleton.  Axioms whose images coincide are
instances of one modelling structure.

Sets of axioms (for example all axioms about one class) are abstracted
element-wise into a multiset of structures, since how often a structure
recurs is part of the pattern.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .tree import PLACEHOLDER, Tree


def ground_generalisation(t: Tree) -> Tree:
    """Replace every leaf with ``*``, keeping constructors and edge tags."""
    if t.is_leaf:
        return Tree(PLACEHOLDER)
    return Tree(
        t.label,
        tuple((tag, ground_generalisation(c)) for tag, c in t.children),
    )


def internal_tree_structure(t: Tree) -> Tree:
    """Delete all leaves, keeping the constructor skeleton.

    The root is a constructor node for every axiom tree, so the result is
    never empty; a constructor whose arguments were all atomic becomes a
    childless node.
    """
    kept = tuple(
        (tag, internal_tree_structure(c))
        for tag, c in t.children
        if not c.is_leaf
    )
    return Tree(t.label, kept)


ABSTRACTIONS: dict[str, Callable[[Tree], Tree]] = {
    "G": ground_generalisation,
    "I": internal_tree_structure,
}


@dataclass(frozen=True, eq=False)
class StructureMultiset:
    """A multiset of modelling structures, keyed by canonical encoding.

    ``entries`` maps each structure's encoding to the structure and its
    multiplicity.  The canonical encoding of the whole multiset lists
    ``encoding^multiplicity`` terms in sorted order, so two multisets are
    equal exactly when their encodings are.
    """

    entries: dict[str, tuple[Tree, int]]
    encoding: str = field(init=False, repr=False)

    def __post_init__(self) -> None:
        ordered = dict(sorted(self.entries.items()))
        object.__setattr__(self, "entries", ordered)
        body = ",".join(f"{enc}^{m}" for enc, (_, m) in ordered.items())
        object.__setattr__(self, "encoding", "{" + body + "}")

    def multiplicity(self, encoding: str) -> int:
        entry = self.entries.get(encoding)
        return entry[1] if entry else 0

    def total(self) -> int:
        """Number of members counted with multiplicity."""
        return sum(m for _, m in self.entries.values())

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, StructureMultiset)
            and self.encoding == other.encoding
        )

    def __hash__(self) -> int:
        return hash(self.encoding)


def lift(trees: Iterable[Tree], abstraction: str = "G") -> StructureMultiset:
    """Abstract each tree and collect the results as a multiset."""
    fn = ABSTRACTIONS[abstraction]
    entries: dict[str, tuple[Tree, int]] = {}
    for t in trees:
        a = fn(t)
        prior = entries.get(a.encoding)
        entries[a.encoding] = (a, prior[1] + 1 if prior else 1)
    return StructureMultiset(entries)
