"""Partitioning axioms and frames into syntactic regularities.

A regularity is a maximal group of axioms (or frames) that share one
modelling structure under a chosen abstraction.  Grouping is by canonical
encoding, so it costs one abstraction pass plus a dictionary fill.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .abstraction import ABSTRACTIONS, StructureMultiset
from .frames import ClassFrame
from .fss import Document
from .tree import Tree

Structure = Union[Tree, StructureMultiset]


@dataclass(frozen=True)
class Regularity:
    """One group of a partition: a structure and its members.

    ``members`` holds axiom indices for axiom partitions and frame subjects
    for frame partitions, in source order.
    """

    structure: Structure
    members: tuple

    @property
    def size(self) -> int:
        return len(self.members)


def _sorted_groups(groups: dict[str, tuple[Structure, list]]) -> list[Regularity]:
    regs = [
        Regularity(structure=s, members=tuple(members))
        for s, members in groups.values()
    ]
    regs.sort(key=lambda r: (-r.size, r.structure.encoding))
    return regs


def partition_axioms(doc: Document, abstraction: str = "G") -> list[Regularity]:
    """Group the document's axioms by modelling structure.

    Duplicates count separately.  The result is ordered largest group
    first, ties broken by structure encoding, so equal inputs give equal
    output lists.
    """
    fn = ABSTRACTIONS[abstraction]
    groups: dict[str, tuple[Structure, list]] = {}
    for i, axiom in enumerate(doc.axioms):
        s = fn(axiom)
        if s.encoding in groups:
            groups[s.encoding][1].append(i)
        else:
            groups[s.encoding] = (s, [i])
    return _sorted_groups(groups)


def partition_frames(frames: Sequence[ClassFrame]) -> list[Regularity]:
    """Group class frames by their ground-generalised multiset."""
    groups: dict[str, tuple[Structure, list]] = {}
    for frame in frames:
        s = frame.structure
        if s.encoding in groups:
            groups[s.encoding][1].append(frame.subject)
        else:
            groups[s.encoding] = (s, [frame.subject])
    return _sorted_groups(groups)


def coverage_count(partition: Sequence[Regularity], threshold: float) -> int:
    """Fewest regularities whose members cover ``threshold`` of the total.

    Taking groups largest-first is optimal here, since any cover can be
    replaced group-for-group by the largest ones.  An empty partition needs
    0 groups.
    """
    if not 0.0 < threshold <= 1.0:
        raise ValueError(f"threshold must be in (0, 1], got {threshold}")
    total = sum(r.size for r in partition)
    if total == 0:
        return 0
    needed = threshold * total
    covered = 0
    for k, reg in enumerate(partition, start=1):
        covered += reg.size
        if covered >= needed:
            return k
    return len(partition)


def threshold_table(
    partition: Sequence[Regularity],
    min_counts: Iterable[int],
    min_sizes: Iterable[int],
) -> dict[tuple[int, int], bool]:
    """For each (k, s): are there at least k groups of at least s members?"""
    sizes = sorted((r.size for r in partition), reverse=True)
    table: dict[tuple[int, int], bool] = {}
    for k in min_counts:
        for s in min_sizes:
            table[(k, s)] = sum(1 for x in sizes if x >= s) >= k
    return table


def top_structures(partition: Sequence[Regularity], k: int) -> list[Structure]:
    """Structures of the ``k`` largest regularities, in partition order."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    return [r.structure for r in partition[:k]]


@dataclass(frozen=True)
class CommonStructureRow:
    """One row of a cross-ontology table: a structure and where it is common."""

    structure: Structure
    counts: dict[str, int]
    total: int


def aggregate_common(
    per_ontology_tops: Iterable[tuple[str, str, Sequence[Structure]]],
    categories: Sequence[str] = ("atomic", "elpp", "rich"),
) -> list[CommonStructureRow]:
    """Tabulate how many ontologies of each category share each structure.

    Input triples are (ontology id, category, its top structures); a
    structure is counted once per ontology however often it appears there.
    Rows come out most-widespread first, ties broken by encoding.
    """
    seen: dict[str, tuple[Structure, dict[str, int]]] = {}
    for _, category, structures in per_ontology_tops:
        distinct = {s.encoding: s for s in structures}
        for enc, s in distinct.items():
            if enc not in seen:
                seen[enc] = (s, {c: 0 for c in categories})
            counts = seen[enc][1]
            counts[category] = counts.get(category, 0) + 1
    rows = [
        CommonStructureRow(structure=s, counts=c, total=sum(c.values()))
        for s, c in seen.values()
    ]
    rows.sort(key=lambda r: (-r.total, r.structure.encoding))
    return rows
