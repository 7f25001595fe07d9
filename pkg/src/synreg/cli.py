"""Command-line interface.

Five subcommands: ``analyze`` one file, ``survey`` a directory, ``top``
largest regularities, ``poset`` containment diagrams, ``classify``
expressivity category.  Exit codes: 0 when a complete report was produced,
1 for usage errors (and a poset timeout, which leaves the report
incomplete), 2 for unreadable or unparseable input.  The default time
budget can also be set through the ``SYNREG_BUDGET`` environment variable;
an explicit ``--budget`` wins.
"""

from __future__ import annotations

import argparse
import os
import sys

from .frames import extract_frames
from .fss import ParseError, deduplicate, parse_file
from .order import PosetTimeout, build_poset
from .profile import classify
from .regularity import partition_axioms, partition_frames
from .survey import (
    DEFAULT_BUDGET,
    TOP_K,
    analyze,
    corpus_csv,
    render_structure,
    report_csv,
    report_json,
    survey_corpus,
)


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        raise _UsageError(message)


def _default_budget() -> float:
    raw = os.environ.get("SYNREG_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return float(raw)
    except ValueError:
        raise _UsageError(f"SYNREG_BUDGET is not a number: {raw!r}")


def _build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(
        prog="synreg",
        description="Survey the syntactic regularities of OWL ontologies.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: _ArgumentParser, budget: bool = False) -> None:
        p.add_argument("input", help="input path")
        p.add_argument(
            "--dedup",
            action="store_true",
            help="drop repeated axioms before analysis",
        )
        p.add_argument("-o", "--output", help="write the report to a file")
        if budget:
            p.add_argument(
                "--budget",
                type=float,
                default=None,
                help="poset time budget per ontology, in seconds",
            )

    p = sub.add_parser("analyze", help="full report for one ontology")
    common(p, budget=True)
    p.add_argument(
        "--format",
        choices=("structured", "tabular"),
        default="structured",
        help="structured JSON or tabular CSV",
    )

    p = sub.add_parser("survey", help="survey a directory of ontologies")
    common(p, budget=True)
    p.add_argument(
        "--format",
        choices=("structured", "tabular"),
        default="structured",
        help="structured JSON or tabular CSV",
    )

    p = sub.add_parser("top", help="largest regularities of one ontology")
    common(p)
    p.add_argument("-k", type=int, default=TOP_K, help="how many to show")
    p.add_argument(
        "--abstraction",
        choices=("G", "I"),
        default="G",
        help="abstraction for the axiom partition",
    )

    p = sub.add_parser("poset", help="containment posets of one ontology")
    common(p, budget=True)
    p.add_argument(
        "--abstraction",
        choices=("G", "I"),
        default="G",
        help="abstraction for the axiom partition",
    )

    p = sub.add_parser("classify", help="expressivity category of one ontology")
    common(p)

    return parser


def _load(args) -> "Document":
    doc = parse_file(args.input)
    return deduplicate(doc) if getattr(args, "dedup", False) else doc


def _run(args) -> str:
    budget = getattr(args, "budget", None)
    if budget is None:
        budget = _default_budget()
    if args.command == "analyze":
        report = analyze(_load(args), budget=budget)
        if args.format == "tabular":
            return report_csv([report], with_index=False)
        return report_json(report)
    if args.command == "survey":
        report = survey_corpus(args.input, budget=budget, dedup=args.dedup)
        if args.format == "tabular":
            return corpus_csv(report)
        return report_json(report)
    if args.command == "top":
        doc = _load(args)
        if args.k < 0:
            raise _UsageError(f"-k must be non-negative, got {args.k}")
        part_ax = partition_axioms(doc, args.abstraction)
        part_fr = partition_frames(extract_frames(doc))
        lines = ["[axioms]"]
        lines.extend(
            f"size={r.size}  {render_structure(r.structure)}"
            for r in part_ax[: args.k]
        )
        lines.append("[frames]")
        lines.extend(
            f"size={r.size}  {render_structure(r.structure)}"
            for r in part_fr[: args.k]
        )
        return "\n".join(lines) + "\n"
    if args.command == "poset":
        doc = _load(args)
        part_ax = partition_axioms(doc, args.abstraction)
        part_fr = partition_frames(extract_frames(doc))
        lines: list[str] = []
        for title, part, kind in (
            ("[axioms]", part_ax, "axiom"),
            ("[frames]", part_fr, "frame"),
        ):
            poset = build_poset(
                [r.structure for r in part], kind, budget=budget
            )
            lines.append(title)
            lines.append(f"depth={poset.depth}")
            lines.append(f"max_branching={poset.max_branching}")
            edges = sorted(
                (
                    poset.elements[i].encoding,
                    poset.elements[j].encoding,
                )
                for i, j in poset.hasse_edges
            )
            lines.extend(f"{small} -> {big}" for small, big in edges)
        return "\n".join(lines) + "\n"
    if args.command == "classify":
        return classify(_load(args)) + "\n"
    raise _UsageError(f"unknown command {args.command!r}")


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        text = _run(args)
    except _UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1
    except PosetTimeout as e:
        print(f"error: poset construction timed out: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1
    except FileNotFoundError as e:
        print(f"error: cannot read {e.filename}", file=sys.stderr)
        return 2
    except IsADirectoryError as e:
        print(f"error: {e.filename} is a directory", file=sys.stderr)
        return 2
    except ParseError as e:
        print(f"error: {getattr(args, 'input', '?')}: {e}", file=sys.stderr)
        return 2
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as f:
                f.write(text)
        except OSError as e:
            print(f"error: cannot write {args.output}: {e}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
