"""Frame membership, extraction, and the frameless count."""

from __future__ import annotations

import random

from brute import random_document
from synreg import (
    Document,
    axiom_frame_subjects,
    expr,
    extract_frames,
    frameless_axiom_count,
    leaf,
    lift,
    parse_document,
)


def _named(n: str):
    return leaf(f"http://x.org/{n}")


def _make_doc(*axioms) -> Document:
    return Document(
        prefixes={}, axioms=tuple(axioms), skipped=0, warnings=()
    )


def test_subjects_per_axiom_kind():
    a, b, c = "http://x.org/A", "http://x.org/B", "http://x.org/C"
    sub = expr("SubClassOf", _named("A"), _named("B"))
    assert axiom_frame_subjects(sub) == (a,)

    gci = expr(
        "SubClassOf",
        expr("ObjectIntersectionOf", _named("A"), _named("B")),
        _named("C"),
    )
    assert axiom_frame_subjects(gci) == ()

    eq = expr("EquivalentClasses", _named("A"), _named("B"))
    assert axiom_frame_subjects(eq) == (a, b)

    dis = expr(
        "DisjointClasses",
        _named("C"),
        expr("ObjectComplementOf", _named("A")),
        _named("B"),
    )
    assert axiom_frame_subjects(dis) == (b, c)

    union = expr("DisjointUnion", _named("A"), _named("B"), _named("C"))
    assert axiom_frame_subjects(union) == (a,)


def test_extraction_example():
    doc = _make_doc(
        expr("SubClassOf", _named("C"), _named("B")),
        expr("SubClassOf", _named("C"), _named("D")),
        expr("SubClassOf", _named("B"), _named("C")),
    )
    frames = extract_frames(doc)
    assert [f.subject for f in frames] == ["http://x.org/B", "http://x.org/C"]
    by_subject = {f.subject: f for f in frames}
    assert by_subject["http://x.org/C"].member_axioms == (0, 1)
    assert by_subject["http://x.org/B"].member_axioms == (2,)
    assert by_subject["http://x.org/C"].structure == lift(doc.axioms[:2], "G")
    assert frameless_axiom_count(doc, frames) == 0


def test_symmetric_axiom_joins_every_named_argument_frame():
    doc = _make_doc(expr("EquivalentClasses", _named("A"), _named("B")))
    frames = extract_frames(doc)
    assert [f.subject for f in frames] == ["http://x.org/A", "http://x.org/B"]
    assert all(f.member_axioms == (0,) for f in frames)


def test_gcis_are_frameless():
    gci = expr(
        "SubClassOf",
        expr("ObjectSomeValuesFrom", _named("p"), _named("A")),
        _named("B"),
    )
    doc = _make_doc(gci, gci)
    frames = extract_frames(doc)
    assert frames == []
    assert frameless_axiom_count(doc, frames) == 2


def test_frame_structure_counts_multiplicity():
    doc = _make_doc(
        expr("SubClassOf", _named("A"), _named("B")),
        expr("SubClassOf", _named("A"), _named("C")),
        expr("SubClassOf", _named("A"), expr("ObjectHasSelf", _named("p"))),
    )
    (frame,) = extract_frames(doc)
    flat = expr("SubClassOf", leaf("*"), leaf("*")).encoding
    assert frame.structure.multiplicity(flat) == 2
    assert frame.structure.total() == 3


def test_document_order_does_not_change_frames():
    rng = random.Random(121)
    for _ in range(100):
        doc = random_document(rng, max_axioms=12)
        perm = list(range(len(doc.axioms)))
        rng.shuffle(perm)
        shuffled = _make_doc(*(doc.axioms[i] for i in perm))
        a = {(f.subject, f.structure.encoding) for f in extract_frames(doc)}
        b = {(f.subject, f.structure.encoding) for f in extract_frames(shuffled)}
        assert a == b


def test_membership_is_exactly_the_subject_rule():
    rng = random.Random(131)
    for _ in range(100):
        doc = random_document(rng, max_axioms=15)
        frames = extract_frames(doc)
        by_subject = {f.subject: set(f.member_axioms) for f in frames}
        seen = set()
        for i, axiom in enumerate(doc.axioms):
            for subject in axiom_frame_subjects(axiom):
                assert i in by_subject[subject]
                seen.add(i)
        for f in frames:
            for i in f.member_axioms:
                assert f.subject in axiom_frame_subjects(doc.axioms[i])
        assert frameless_axiom_count(doc, frames) == len(doc.axioms) - len(seen)


def test_frames_from_parsed_text():
    doc = parse_document(
        """
        Prefix(:=<http://x.org/>)
        Ontology(
          SubClassOf(:A :B)
          DisjointUnion(:D :E :F)
          SubClassOf(ObjectComplementOf(:A) :B)
        )
        """
    )
    frames = extract_frames(doc)
    assert [f.subject for f in frames] == ["http://x.org/A", "http://x.org/D"]
    assert frameless_axiom_count(doc, frames) == 1
