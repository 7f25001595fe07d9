"""Leaf replacement, leaf deletion, and multiset lifting."""

from __future__ import annotations

import random
from collections import Counter

from brute import random_axiom, trees_equal
from synreg import (
    Tree,
    expr,
    ground_generalisation,
    internal_tree_structure,
    leaf,
    lift,
    node_count,
    tree_depth,
)


def _star() -> Tree:
    return leaf("*")


def _named(n: str) -> Tree:
    return leaf(f"http://x.org/{n}")


def test_ground_generalisation_pinned_example():
    t = expr(
        "SubClassOf",
        _named("A1"),
        expr("ObjectSomeValuesFrom", _named("P"), _named("A2")),
    )
    assert ground_generalisation(t) == expr(
        "SubClassOf", _star(), expr("ObjectSomeValuesFrom", _star(), _star())
    )


def test_same_shape_means_same_generalisation():
    a = expr(
        "SubClassOf",
        _named("A"),
        expr("ObjectSomeValuesFrom", _named("P"), _named("B")),
    )
    b = expr(
        "SubClassOf",
        _named("C"),
        expr("ObjectSomeValuesFrom", _named("Q"), _named("D")),
    )
    assert ground_generalisation(a) == ground_generalisation(b)
    assert a != b


def test_internal_structure_deletes_all_leaves():
    t = expr(
        "SubClassOf",
        _named("A"),
        expr("ObjectIntersectionOf", _named("B"), _named("C")),
    )
    i = internal_tree_structure(t)
    assert i == Tree(
        "SubClassOf", (("super", Tree("ObjectIntersectionOf")),)
    )
    assert node_count(i) == 2

    flat = expr("SubClassOf", _named("A"), _named("B"))
    assert internal_tree_structure(flat) == Tree("SubClassOf")
    assert node_count(internal_tree_structure(flat)) == 1


def test_internal_structure_chain_depth():
    t = expr(
        "EquivalentClasses",
        _named("X"),
        expr(
            "ObjectIntersectionOf",
            _named("A"),
            expr(
                "ObjectSomeValuesFrom",
                _named("p"),
                expr(
                    "ObjectIntersectionOf",
                    _named("B"),
                    expr("ObjectSomeValuesFrom", _named("q"), _named("C")),
                ),
            ),
        ),
    )
    i = internal_tree_structure(t)
    assert node_count(i) == 5
    assert tree_depth(i) == 4


def test_generalisation_preserves_shape():
    rng = random.Random(505)
    for _ in range(300):
        t = random_axiom(rng)
        g = ground_generalisation(t)
        assert node_count(g) == node_count(t)
        assert tree_depth(g) == tree_depth(t)
        assert _tag_multiset(g) == _tag_multiset(t)


def _tag_multiset(t: Tree) -> Counter:
    tags = Counter()
    for tag, c in t.children:
        tags[tag] += 1
        tags.update(_tag_multiset(c))
    return tags


def test_internal_structure_counts_internal_nodes():
    rng = random.Random(606)
    for _ in range(300):
        t = random_axiom(rng)
        assert node_count(internal_tree_structure(t)) == _internal_count(t)


def _internal_count(t: Tree) -> int:
    if t.is_leaf:
        return 0
    return 1 + sum(_internal_count(c) for _, c in t.children)


def test_abstractions_are_idempotent_and_commute():
    rng = random.Random(707)
    for _ in range(300):
        t = random_axiom(rng)
        g = ground_generalisation(t)
        i = internal_tree_structure(t)
        assert ground_generalisation(g) == g
        assert internal_tree_structure(i) == i
        # deleting leaves after blanking them deletes the same nodes
        assert internal_tree_structure(g) == i
        # an already leafless tree is its own generalisation
        assert ground_generalisation(i) == i


def test_generalisation_determines_internal_structure():
    rng = random.Random(808)
    pairs = 0
    for _ in range(400):
        a, b = random_axiom(rng), random_axiom(rng)
        if ground_generalisation(a) == ground_generalisation(b):
            pairs += 1
            assert internal_tree_structure(a) == internal_tree_structure(b)
    assert pairs > 0


def test_converse_fails_for_nary_constructors():
    two = expr(
        "SubClassOf",
        _named("A"),
        expr("ObjectIntersectionOf", _named("B"), _named("C")),
    )
    three = expr(
        "SubClassOf",
        _named("A"),
        expr("ObjectIntersectionOf", _named("B"), _named("C"), _named("D")),
    )
    assert internal_tree_structure(two) == internal_tree_structure(three)
    assert ground_generalisation(two) != ground_generalisation(three)


def test_abstracted_trees_stay_isomorphism_consistent():
    rng = random.Random(909)
    for _ in range(200):
        a, b = random_axiom(rng), random_axiom(rng)
        ga, gb = ground_generalisation(a), ground_generalisation(b)
        assert (ga == gb) == trees_equal(ga, gb)


def test_lift_counts_multiplicities():
    c, b, d = _named("C"), _named("B"), _named("D")
    axioms = [expr("SubClassOf", c, b), expr("SubClassOf", c, d)]
    ms = lift(axioms, "G")
    flat = expr("SubClassOf", _star(), _star())
    assert ms.multiplicity(flat.encoding) == 2
    assert ms.total() == 2
    assert len(ms.entries) == 1
    assert ms.encoding == "{" + flat.encoding + "^2}"


def test_lift_distinguishes_multiplicity_from_membership():
    axiom = expr("SubClassOf", _named("A"), _named("B"))
    twice = lift([axiom, axiom], "G")
    once = lift([axiom], "G")
    flat = ground_generalisation(axiom)
    assert twice != once
    assert twice.multiplicity(flat.encoding) == 2
    assert once.multiplicity(flat.encoding) == 1
    assert once.multiplicity("nonsense") == 0


def test_lift_is_order_insensitive():
    rng = random.Random(111)
    for _ in range(100):
        axioms = [random_axiom(rng) for _ in range(rng.randint(0, 10))]
        shuffled = axioms[:]
        rng.shuffle(shuffled)
        assert lift(axioms, "G") == lift(shuffled, "G")
        assert lift(axioms, "I") == lift(shuffled, "I")


def test_lift_empty():
    ms = lift([], "G")
    assert ms.total() == 0
    assert ms.encoding == "{}"
