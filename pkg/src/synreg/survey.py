"""The survey pipeline: per-ontology analysis and corpus aggregation.

``analyze`` runs the full battery on one document: regularity counts under
both abstractions, group-size histograms, how many groups cover 90% of the
axioms, the three largest structures, extreme structure sizes, and the
depth and branching of the two containment posets.  Poset construction is
the only expensive part, so it runs under a per-ontology budget; on
timeout the report keeps everything else and flags ``timed_out``.

``survey_corpus`` applies this to every ``.ofn`` file in a directory,
orders the results by (category, axiom count), and aggregates the
per-ontology top structures into cross-ontology tables.  Reports
serialise to JSON (structured) and CSV (tabular); both are deterministic
functions of the input bytes.
"""

from __future__ import annotations

import csv
import io
import json
import time
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from .abstraction import StructureMultiset
from .frames import extract_frames, frameless_axiom_count
from .fss import Document, ParseError, deduplicate, parse_file
from .order import PosetTimeout, build_poset
from .profile import CATEGORIES, classify
from .regularity import (
    CommonStructureRow,
    Regularity,
    aggregate_common,
    coverage_count,
    partition_axioms,
    partition_frames,
    threshold_table,
    top_structures,
)
from .tree import Tree, node_count, tree_depth

DEFAULT_BUDGET = 60.0
TOP_K = 3
COVERAGE_THRESHOLD = 0.9
MIN_COUNTS = (5, 10)
MIN_SIZES = (10, 100, 1000)

_CATEGORY_ORDER = {category: i for i, category in enumerate(CATEGORIES)}


def render_structure(s) -> str:
    """Human-readable form of a structure: tags elided, children in canonical order."""
    if isinstance(s, StructureMultiset):
        parts = (
            f"{_render_tree(t)}^{m}" for _, (t, m) in s.entries.items()
        )
        return "{" + ", ".join(parts) + "}"
    return _render_tree(s)


def _render_tree(t: Tree) -> str:
    if not t.children:
        return t.label
    return t.label + "(" + ", ".join(_render_tree(c) for _, c in t.children) + ")"


@dataclass
class OntologyReport:
    """Everything the survey measures about one ontology."""

    id: str
    category: str
    axiom_count: int
    frame_count: int
    frameless_count: int
    regularities_axioms_G: int
    regularities_axioms_I: int
    regularities_frames: int
    size_histogram: dict[str, dict[int, int]]
    coverage_90: dict[str, int]
    top3_axioms: list[tuple[str, int]]
    top3_frames: list[tuple[str, int]]
    max_structure_size: int
    max_structure_depth: int
    max_frame_axioms: int
    hasse_axioms: Optional[tuple[int, int]]
    hasse_frames: Optional[tuple[int, int]]
    timed_out: bool

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "category": self.category,
            "axiom_count": self.axiom_count,
            "frame_count": self.frame_count,
            "frameless_count": self.frameless_count,
            "regularities_axioms_G": self.regularities_axioms_G,
            "regularities_axioms_I": self.regularities_axioms_I,
            "regularities_frames": self.regularities_frames,
            "size_histogram": {
                key: {str(size): count for size, count in hist.items()}
                for key, hist in self.size_histogram.items()
            },
            "coverage_90": dict(self.coverage_90),
            "top3_axioms": [
                {"structure": s, "size": n} for s, n in self.top3_axioms
            ],
            "top3_frames": [
                {"structure": s, "size": n} for s, n in self.top3_frames
            ],
            "max_structure_size": self.max_structure_size,
            "max_structure_depth": self.max_structure_depth,
            "max_frame_axioms": self.max_frame_axioms,
            "hasse_axioms": list(self.hasse_axioms) if self.hasse_axioms else None,
            "hasse_frames": list(self.hasse_frames) if self.hasse_frames else None,
            "timed_out": self.timed_out,
        }


def _histogram(partition: Sequence[Regularity]) -> dict[int, int]:
    counts = Counter(r.size for r in partition)
    return {size: counts[size] for size in sorted(counts)}


def _tops(partition: Sequence[Regularity], k: int) -> list[tuple[str, int]]:
    return [(render_structure(r.structure), r.size) for r in partition[:k]]


def analyze(doc: Document, budget: float = DEFAULT_BUDGET) -> OntologyReport:
    """Run all measurements on one document.

    ``budget`` bounds the total poset-construction time in seconds and
    must be positive.
    """
    if budget <= 0:
        raise ValueError(f"budget must be positive, got {budget}")
    deadline = time.monotonic() + budget
    part_g = partition_axioms(doc, "G")
    part_i = partition_axioms(doc, "I")
    frames = extract_frames(doc)
    part_f = partition_frames(frames)

    hasse_axioms: Optional[tuple[int, int]] = None
    hasse_frames: Optional[tuple[int, int]] = None
    timed_out = False
    try:
        if part_g:
            poset = build_poset(
                [r.structure for r in part_g],
                "axiom",
                budget=deadline - time.monotonic(),
            )
            hasse_axioms = (poset.depth, poset.max_branching)
        if part_f:
            poset = build_poset(
                [r.structure for r in part_f],
                "frame",
                budget=deadline - time.monotonic(),
            )
            hasse_frames = (poset.depth, poset.max_branching)
    except PosetTimeout:
        timed_out = True

    return OntologyReport(
        id=doc.name,
        category=classify(doc),
        axiom_count=len(doc.axioms),
        frame_count=len(frames),
        frameless_count=frameless_axiom_count(doc, frames),
        regularities_axioms_G=len(part_g),
        regularities_axioms_I=len(part_i),
        regularities_frames=len(part_f),
        size_histogram={
            "axioms_G": _histogram(part_g),
            "axioms_I": _histogram(part_i),
            "frames": _histogram(part_f),
        },
        coverage_90={
            "axioms_G": coverage_count(part_g, COVERAGE_THRESHOLD),
            "axioms_I": coverage_count(part_i, COVERAGE_THRESHOLD),
            "frames": coverage_count(part_f, COVERAGE_THRESHOLD),
        },
        top3_axioms=_tops(part_g, TOP_K),
        top3_frames=_tops(part_f, TOP_K),
        max_structure_size=max(
            (node_count(r.structure) for r in part_g), default=0
        ),
        max_structure_depth=max(
            (tree_depth(r.structure) for r in part_g), default=0
        ),
        max_frame_axioms=max(
            (f.structure.total() for f in frames), default=0
        ),
        hasse_axioms=hasse_axioms,
        hasse_frames=hasse_frames,
        timed_out=timed_out,
    )


@dataclass
class CorpusReport:
    """Survey results for a directory of ontologies.

    ``ontologies`` is ordered by (category, axiom count, id); an
    ontology's index is its position here.  Files that failed to parse are
    listed in ``excluded`` with the reason.
    """

    ontologies: list[OntologyReport]
    excluded: list[tuple[str, str]]
    common_structures_axioms: list[CommonStructureRow]
    common_structures_frames: list[CommonStructureRow]
    threshold_tables: dict[str, dict[int, dict[int, dict[str, int]]]]

    def to_dict(self) -> dict:
        def rows(table: list[CommonStructureRow]) -> list[dict]:
            return [
                {
                    "structure": render_structure(r.structure),
                    **r.counts,
                    "total": r.total,
                }
                for r in table
            ]

        return {
            "ontologies": [
                {"index": i, **r.to_dict()}
                for i, r in enumerate(self.ontologies)
            ],
            "excluded": [
                {"id": name, "error": reason} for name, reason in self.excluded
            ],
            "common_structures_axioms": rows(self.common_structures_axioms),
            "common_structures_frames": rows(self.common_structures_frames),
            "threshold_tables": {
                key: {
                    str(k): {
                        str(s): dict(cats) for s, cats in by_size.items()
                    }
                    for k, by_size in by_count.items()
                }
                for key, by_count in self.threshold_tables.items()
            },
        }


def survey_corpus(
    directory,
    budget: float = DEFAULT_BUDGET,
    *,
    dedup: bool = False,
) -> CorpusReport:
    """Survey every ``.ofn`` file under ``directory``.

    Unparseable files are excluded (with the parse error recorded), not
    fatal.  ``dedup`` drops repeated axioms per file before analysis.
    """
    root = Path(directory)
    if not root.is_dir():
        raise ValueError(f"not a directory: {directory}")
    paths = sorted(root.glob("*.ofn"))
    if not paths:
        raise ValueError(f"no .ofn files in {directory}")

    docs: list[Document] = []
    excluded: list[tuple[str, str]] = []
    for path in paths:
        try:
            doc = parse_file(path)
        except ParseError as e:
            excluded.append((path.name, str(e)))
            continue
        docs.append(deduplicate(doc) if dedup else doc)

    reports = [analyze(doc) for doc in docs]
    order = sorted(
        range(len(reports)),
        key=lambda i: (
            _CATEGORY_ORDER[reports[i].category],
            reports[i].axiom_count,
            reports[i].id,
        ),
    )
    reports = [reports[i] for i in order]
    docs = [docs[i] for i in order]

    tops_axioms = []
    tops_frames = []
    tables: dict[str, dict[int, dict[int, dict[str, int]]]] = {
        key: {
            k: {s: {c: 0 for c in CATEGORIES} for s in MIN_SIZES}
            for k in MIN_COUNTS
        }
        for key in ("axioms", "frames")
    }
    for doc, report in zip(docs, reports):
        part_g = partition_axioms(doc, "G")
        part_f = partition_frames(extract_frames(doc))
        tops_axioms.append(
            (report.id, report.category, top_structures(part_g, TOP_K))
        )
        tops_frames.append(
            (report.id, report.category, top_structures(part_f, TOP_K))
        )
        for key, part in (("axioms", part_g), ("frames", part_f)):
            passed = threshold_table(part, MIN_COUNTS, MIN_SIZES)
            for (k, s), ok in passed.items():
                if ok:
                    tables[key][k][s][report.category] += 1

    return CorpusReport(
        ontologies=reports,
        excluded=excluded,
        common_structures_axioms=aggregate_common(tops_axioms, CATEGORIES),
        common_structures_frames=aggregate_common(tops_frames, CATEGORIES),
        threshold_tables=tables,
    )


def report_json(report) -> str:
    """Serialise an ontology or corpus report as stable, indented JSON."""
    return json.dumps(report.to_dict(), indent=2) + "\n"


_CSV_COLUMNS = [
    "index",
    "id",
    "category",
    "axiom_count",
    "frame_count",
    "frameless_count",
    "regularities_axioms_G",
    "regularities_axioms_I",
    "regularities_frames",
    "coverage_90_axioms_G",
    "coverage_90_axioms_I",
    "coverage_90_frames",
    "max_structure_size",
    "max_structure_depth",
    "max_frame_axioms",
    "hasse_axioms_depth",
    "hasse_axioms_branching",
    "hasse_frames_depth",
    "hasse_frames_branching",
    "timed_out",
]


def report_csv(reports: Sequence[OntologyReport], *, with_index: bool = True) -> str:
    """Flatten per-ontology reports to CSV, one row per ontology.

    Nested fields that have no scalar shape (histograms, top structures)
    are left to the JSON format; absent posets give empty cells.
    """
    columns = _CSV_COLUMNS if with_index else _CSV_COLUMNS[1:]
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(columns)
    for i, r in enumerate(reports):
        hasse_ax = r.hasse_axioms or ("", "")
        hasse_fr = r.hasse_frames or ("", "")
        row = {
            "index": i,
            "id": r.id,
            "category": r.category,
            "axiom_count": r.axiom_count,
            "frame_count": r.frame_count,
            "frameless_count": r.frameless_count,
            "regularities_axioms_G": r.regularities_axioms_G,
            "regularities_axioms_I": r.regularities_axioms_I,
            "regularities_frames": r.regularities_frames,
            "coverage_90_axioms_G": r.coverage_90["axioms_G"],
            "coverage_90_axioms_I": r.coverage_90["axioms_I"],
            "coverage_90_frames": r.coverage_90["frames"],
            "max_structure_size": r.max_structure_size,
            "max_structure_depth": r.max_structure_depth,
            "max_frame_axioms": r.max_frame_axioms,
            "hasse_axioms_depth": hasse_ax[0],
            "hasse_axioms_branching": hasse_ax[1],
            "hasse_frames_depth": hasse_fr[0],
            "hasse_frames_branching": hasse_fr[1],
            "timed_out": "true" if r.timed_out else "false",
        }
        writer.writerow([row[c] for c in columns])
    return out.getvalue()


def corpus_csv(report: CorpusReport) -> str:
    """CSV of a corpus survey: the per-ontology table with indices."""
    return report_csv(report.ontologies, with_index=True)
