"""Coarse expressivity categories for parsed ontologies.

``atomic``: every axiom is a SubClassOf or EquivalentClasses between named
classes only.  ``elpp``: every axiom stays inside the EL++ class-expression
fragment (existential restrictions, intersections, value and self
restrictions, singleton nominals).  Everything else is ``rich``.  The
categories are nested, so each document gets the narrowest label that fits;
an empty document is atomic.
"""

from __future__ import annotations

from .fss import Document
from .tree import Tree

ATOMIC = "atomic"
ELPP = "elpp"
RICH = "rich"
CATEGORIES = (ATOMIC, ELPP, RICH)

_ELPP_AXIOM_KINDS = frozenset({
    "SubClassOf",
    "EquivalentClasses",
    "DisjointClasses",
})

_ELPP_CONSTRUCTORS = frozenset({
    "ObjectIntersectionOf",
    "ObjectSomeValuesFrom",
    "ObjectHasValue",
    "ObjectHasSelf",
    "ObjectOneOf",
    "DataSomeValuesFrom",
    "DataHasValue",
})


def classify(doc: Document) -> str:
    """Assign ``doc`` the narrowest of atomic, elpp, rich."""
    if all(_atomic_axiom(a) for a in doc.axioms):
        return ATOMIC
    if all(_elpp_axiom(a) for a in doc.axioms):
        return ELPP
    return RICH


def _atomic_axiom(t: Tree) -> bool:
    if t.label not in ("SubClassOf", "EquivalentClasses"):
        return False
    return all(c.is_leaf for _, c in t.children)


def _elpp_axiom(t: Tree) -> bool:
    if t.label not in _ELPP_AXIOM_KINDS:
        return False
    return all(_elpp_expression(c) for _, c in t.children)


def _elpp_expression(t: Tree) -> bool:
    if t.is_leaf:
        return True
    if t.label not in _ELPP_CONSTRUCTORS:
        return False
    # EL++ admits nominals only as singletons.
    if t.label == "ObjectOneOf" and len(t.children) != 1:
        return False
    return all(_elpp_expression(c) for _, c in t.children)
