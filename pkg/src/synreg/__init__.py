"""Reverse-engineering the syntactic build of OWL ontologies.

Parse functional-syntax class-expression axioms into edge-labelled
unordered trees, abstract them into modelling structures, partition axioms
and class frames into syntactic regularities, order the structures by
containment, and survey whole corpora.
"""

from .abstraction import (
    ABSTRACTIONS,
    StructureMultiset,
    ground_generalisation,
    internal_tree_structure,
    lift,
)
from .fss import (
    Document,
    ParseError,
    deduplicate,
    parse_document,
    parse_file,
    render_axiom,
    render_document,
)
from .frames import (
    ClassFrame,
    axiom_frame_subjects,
    extract_frames,
    frameless_axiom_count,
)
from .order import (
    PosetConsistencyError,
    PosetTimeout,
    StructurePoset,
    axiom_contains,
    build_poset,
    frame_contains,
    tree_embeds,
)
from .profile import ATOMIC, CATEGORIES, ELPP, RICH, classify
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
from .survey import (
    CorpusReport,
    OntologyReport,
    analyze,
    corpus_csv,
    render_structure,
    report_csv,
    report_json,
    survey_corpus,
)
from .tree import (
    AXIOM_KINDS,
    CLASS_CONSTRUCTORS,
    CONSTRUCTORS,
    EDGE_TAGS,
    PLACEHOLDER,
    Tree,
    edge_labels_for,
    expr,
    leaf,
    node_count,
    semantic_children,
    tree_depth,
)

__version__ = "0.1.0"

__all__ = [
    "ABSTRACTIONS",
    "ATOMIC",
    "AXIOM_KINDS",
    "CATEGORIES",
    "CLASS_CONSTRUCTORS",
    "CONSTRUCTORS",
    "ClassFrame",
    "CommonStructureRow",
    "CorpusReport",
    "Document",
    "EDGE_TAGS",
    "ELPP",
    "OntologyReport",
    "ParseError",
    "PLACEHOLDER",
    "PosetConsistencyError",
    "PosetTimeout",
    "RICH",
    "Regularity",
    "StructureMultiset",
    "StructurePoset",
    "Tree",
    "aggregate_common",
    "analyze",
    "axiom_contains",
    "axiom_frame_subjects",
    "build_poset",
    "classify",
    "corpus_csv",
    "coverage_count",
    "deduplicate",
    "edge_labels_for",
    "expr",
    "extract_frames",
    "frame_contains",
    "frameless_axiom_count",
    "ground_generalisation",
    "internal_tree_structure",
    "leaf",
    "lift",
    "node_count",
    "parse_document",
    "parse_file",
    "partition_axioms",
    "partition_frames",
    "render_axiom",
    "render_document",
    "render_structure",
    "report_csv",
    "report_json",
    "semantic_children",
    "survey_corpus",
    "threshold_table",
    "top_structures",
    "tree_depth",
    "tree_embeds",
]
