"""Class frames: grouping axioms by the named class they describe.

An axiom belongs to the frame of a named class when the class is the
subject of a SubClassOf, any direct argument of an EquivalentClasses or
DisjointClasses (those constructors are symmetric, so every named argument
is equally a subject), or the class being partitioned by a DisjointUnion.
Axioms whose subject positions hold only complex expressions, such as
general concept inclusions, belong to no frame.  One axiom can sit in
several frames.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abstraction import StructureMultiset, lift
from .fss import Document
from .tree import Tree


@dataclass(frozen=True)
class ClassFrame:
    """All axioms about one named class.

    ``member_axioms`` holds indices into the source document's axiom list;
    ``structure`` is the multiset of their ground generalisations and is
    what frame-level comparisons work on.
    """

    subject: str
    member_axioms: tuple[int, ...]
    structure: StructureMultiset


def axiom_frame_subjects(t: Tree) -> tuple[str, ...]:
    """Named classes whose frames the axiom belongs to, sorted."""
    kind = t.label
    if kind == "SubClassOf":
        sub = next(c for tag, c in t.children if tag == "sub")
        return (sub.label,) if sub.is_leaf else ()
    if kind in ("EquivalentClasses", "DisjointClasses"):
        return tuple(sorted({c.label for _, c in t.children if c.is_leaf}))
    if kind == "DisjointUnion":
        lhs = next(c for tag, c in t.children if tag == "lhs")
        return (lhs.label,)
    return ()


def extract_frames(doc: Document) -> list[ClassFrame]:
    """All class frames of a document, sorted by subject IRI."""
    members: dict[str, list[int]] = {}
    for i, axiom in enumerate(doc.axioms):
        for subject in axiom_frame_subjects(axiom):
            members.setdefault(subject, []).append(i)
    return [
        ClassFrame(
            subject=subject,
            member_axioms=tuple(indices),
            structure=lift((doc.axioms[i] for i in indices), "G"),
        )
        for subject, indices in sorted(members.items())
    ]


def frameless_axiom_count(doc: Document, frames: list[ClassFrame]) -> int:
    """How many axioms of ``doc`` belong to no frame."""
    covered: set[int] = set()
    for frame in frames:
        covered.update(frame.member_axioms)
    return len(doc.axioms) - len(covered)
