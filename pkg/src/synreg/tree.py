"""Edge-labelled unordered syntax trees for OWL class-expression axioms.

An axiom is stored as a rooted tree.  Inner nodes carry constructor names
(``SubClassOf``, ``ObjectIntersectionOf``, ...) and leaves carry atomic
tokens: IRIs, literals, cardinality integers, or the placeholder ``*``.
Every parent-to-child edge carries a role tag (``sub``, ``super``, ``op``,
``prop``, ...) so that sibling order is irrelevant; two trees are the same
object of study exactly when they are isomorphic respecting node labels and
edge tags.  Equality and hashing go through a canonical string encoding,
which makes grouping and deduplication cheap.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

PLACEHOLDER = "*"

AXIOM_KINDS = frozenset({
    "SubClassOf",
    "EquivalentClasses",
    "DisjointClasses",
    "DisjointUnion",
})

CLASS_CONSTRUCTORS = frozenset({
    "ObjectIntersectionOf",
    "ObjectUnionOf",
    "ObjectComplementOf",
    "ObjectOneOf",
    "ObjectSomeValuesFrom",
    "ObjectAllValuesFrom",
    "ObjectHasValue",
    "ObjectHasSelf",
    "ObjectMinCardinality",
    "ObjectMaxCardinality",
    "ObjectExactCardinality",
    "DataSomeValuesFrom",
    "DataAllValuesFrom",
    "DataHasValue",
    "DataMinCardinality",
    "DataMaxCardinality",
    "DataExactCardinality",
})

CONSTRUCTORS = AXIOM_KINDS | CLASS_CONSTRUCTORS

EDGE_TAGS = frozenset({
    "sub", "super", "lhs", "op", "prop", "filler", "ind", "lit", "range", "card",
})

_AMBIGUOUS_TOKEN = re.compile(
    "^(?:" + "|".join(sorted(CONSTRUCTORS)) + r")\(.*\)$", re.S
)

# Admissible argument counts per constructor: (minimum, maximum or None).
_ARITY: dict[str, tuple[int, int | None]] = {
    "SubClassOf": (2, 2),
    "EquivalentClasses": (2, None),
    "DisjointClasses": (2, None),
    "DisjointUnion": (3, None),
    "ObjectIntersectionOf": (2, None),
    "ObjectUnionOf": (2, None),
    "ObjectComplementOf": (1, 1),
    "ObjectOneOf": (1, None),
    "ObjectSomeValuesFrom": (2, 2),
    "ObjectAllValuesFrom": (2, 2),
    "ObjectHasValue": (2, 2),
    "ObjectHasSelf": (1, 1),
    "ObjectMinCardinality": (2, 3),
    "ObjectMaxCardinality": (2, 3),
    "ObjectExactCardinality": (2, 3),
    "DataSomeValuesFrom": (2, 2),
    "DataAllValuesFrom": (2, 2),
    "DataHasValue": (2, 2),
    "DataMinCardinality": (2, 3),
    "DataMaxCardinality": (2, 3),
    "DataExactCardinality": (2, 3),
}

# Constructors whose arguments all play one symmetric role.
_SYMMETRIC = frozenset({
    "EquivalentClasses",
    "DisjointClasses",
    "ObjectIntersectionOf",
    "ObjectUnionOf",
    "ObjectOneOf",
    "ObjectComplementOf",
})


def edge_labels_for(constructor: str, position: int, arity: int) -> str:
    """Role tag of the argument at ``position`` of an ``arity``-argument node.

    The tag depends only on the constructor, the position, and the argument
    count, never on the argument itself.  Unknown constructors, impossible
    arities, and out-of-range positions raise ``ValueError``.
    """
    if constructor not in CONSTRUCTORS:
        raise ValueError(f"unknown constructor: {constructor!r}")
    lo, hi = _ARITY[constructor]
    if arity < lo or (hi is not None and arity > hi):
        raise ValueError(f"{constructor} cannot take {arity} arguments")
    if not 0 <= position < arity:
        raise ValueError(f"position {position} out of range for arity {arity}")
    if constructor == "SubClassOf":
        return ("sub", "super")[position]
    if constructor == "DisjointUnion":
        return "lhs" if position == 0 else "op"
    if constructor in _SYMMETRIC:
        return "op"
    if constructor in ("ObjectSomeValuesFrom", "ObjectAllValuesFrom"):
        return ("prop", "filler")[position]
    if constructor == "ObjectHasValue":
        return ("prop", "ind")[position]
    if constructor == "ObjectHasSelf":
        return "prop"
    if constructor in ("DataSomeValuesFrom", "DataAllValuesFrom"):
        return ("prop", "range")[position]
    if constructor == "DataHasValue":
        return ("prop", "lit")[position]
    # Cardinality restrictions; the qualifying third slot holds a class
    # expression on the object side and a data range on the data side.
    if constructor.startswith("Data"):
        return ("card", "prop", "range")[position]
    return ("card", "prop", "filler")[position]


@dataclass(frozen=True, eq=False)
class Tree:
    """One node of an edge-labelled unordered tree.

    ``children`` holds ``(tag, subtree)`` pairs and is re-sorted into
    canonical order on construction, so construction order never leaks into
    comparisons.  ``encoding`` is the canonical string form: a leaf encodes
    as its token, an inner node as ``Name(tag=child,...)`` with children
    ordered by ``(tag, child encoding)``.  Two trees are equal exactly when
    their encodings are equal.
    """

    label: str
    children: tuple[tuple[str, "Tree"], ...] = ()
    encoding: str = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if self.children and self.label not in CONSTRUCTORS:
            raise ValueError(f"leaf {self.label!r} cannot have children")
        for tag, _ in self.children:
            if tag not in EDGE_TAGS:
                raise ValueError(f"unknown edge tag: {tag!r}")
        kids = tuple(sorted(self.children, key=lambda c: (c[0], c[1].encoding)))
        object.__setattr__(self, "children", kids)
        if self.label in CONSTRUCTORS:
            body = ",".join(tag + "=" + child.encoding for tag, child in kids)
            enc = self.label + "(" + body + ")"
        else:
            enc = self.label
            # A token that itself looks like a constructor application
            # would collide with the encoding of a childless constructor
            # node, so such tokens (and only such, plus the escape prefix
            # itself) are marked; no constructor encoding starts with "~".
            if enc.startswith("~") or _AMBIGUOUS_TOKEN.match(enc):
                enc = "~" + enc
        object.__setattr__(self, "encoding", enc)

    @property
    def is_leaf(self) -> bool:
        return self.label not in CONSTRUCTORS

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Tree) and self.encoding == other.encoding

    def __hash__(self) -> int:
        return hash(self.encoding)


def leaf(token: str) -> Tree:
    """A leaf node holding an IRI, literal, integer, or ``*``."""
    if token in CONSTRUCTORS:
        raise ValueError(f"{token} is a constructor, not an atomic token")
    return Tree(token)


def expr(constructor: str, *args: Tree) -> Tree:
    """Build a constructor node from positional arguments.

    Role tags are assigned per position via :func:`edge_labels_for`, which
    also validates the arity.
    """
    tags = [edge_labels_for(constructor, i, len(args)) for i in range(len(args))]
    return Tree(constructor, tuple(zip(tags, args)))


def node_count(t: Tree) -> int:
    """Total number of nodes in ``t``."""
    return 1 + sum(node_count(c) for _, c in t.children)


def tree_depth(t: Tree) -> int:
    """Number of edges on a longest root-to-leaf path (0 for a single node)."""
    if not t.children:
        return 0
    return 1 + max(tree_depth(c) for _, c in t.children)


def semantic_children(t: Tree) -> list[Tree]:
    """Children of a concrete node in functional-syntax argument order.

    Undoes the canonical sort: the i-th result is a child whose tag matches
    the tag prescribed for argument position i.  Arguments sharing a tag are
    interchangeable, so any consistent assignment is fine; within a tag the
    canonical order is kept.
    """
    n = len(t.children)
    wanted = [edge_labels_for(t.label, i, n) for i in range(n)]
    pools: dict[str, list[Tree]] = {}
    for tag, child in t.children:
        pools.setdefault(tag, []).append(child)
    out: list[Tree] = []
    taken: dict[str, int] = {}
    for tag in wanted:
        k = taken.get(tag, 0)
        out.append(pools[tag][k])
        taken[tag] = k + 1
    return out
