"""Reader and writer for OWL 2 functional-style syntax documents.

The reader understands ``Prefix(...)`` declarations followed by a single
``Ontology(...)`` block and keeps the four class-expression axiom kinds
(``SubClassOf``, ``EquivalentClasses``, ``DisjointClasses``,
``DisjointUnion``) as trees.  Everything else in the block, declarations,
property axioms, assertions, imports, is skipped over by balanced
parentheses and counted.  ``//`` starts a comment running to end of line.

Axiom annotations are dropped while parsing, so an annotated axiom and its
bare form produce identical trees.  Abbreviated IRIs are expanded against
the declared prefixes (the rdf, rdfs, xsd, and owl namespaces are
predefined); an undeclared prefix is a parse error naming the prefix.

Constructs that are legal OWL but outside the class-expression fragment
handled here (inverse properties, anonymous individuals, composite data
ranges, n-ary data restrictions) cause the enclosing axiom to be skipped
with a warning rather than failing the document.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace

from .tree import AXIOM_KINDS, CLASS_CONSTRUCTORS, Tree, expr, leaf, semantic_children

DEFAULT_PREFIXES = {
    "rdf": "http://www.w3.org/1999/02/22-rdf-syntax-ns#",
    "rdfs": "http://www.w3.org/2000/01/rdf-schema#",
    "xsd": "http://www.w3.org/2001/XMLSchema#",
    "owl": "http://www.w3.org/2002/07/owl#",
}


class ParseError(Exception):
    """Syntax error with the 1-based line and column where it was noticed."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


class _Unsupported(Exception):
    """Internal signal: a legal construct we do not model; skip the axiom."""

    def __init__(self, reason: str, line: int):
        super().__init__(reason)
        self.reason = reason
        self.line = line


@dataclass(frozen=True)
class Document:
    """A parsed ontology document.

    ``axioms`` holds the class-expression axioms in file order, duplicates
    included.  ``skipped`` counts axioms that were recognised as something
    else (or hit an unsupported construct) and dropped; warnings explain the
    unsupported ones.  Instances are immutable; the prefix mapping must not
    be mutated after construction.
    """

    prefixes: dict[str, str]
    axioms: tuple[Tree, ...]
    skipped: int
    warnings: tuple[str, ...]
    name: str = ""


@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    line: int
    col: int


_TOKEN_RE = re.compile(
    r"""
      (?P<WS>\s+)
    | (?P<COMMENT>//[^\n]*)
    | (?P<LPAREN>\()
    | (?P<RPAREN>\))
    | (?P<EQUALS>=)
    | (?P<CARETS>\^\^)
    | (?P<IRIREF><[^>\n]*>)
    | (?P<STRING>"(?:[^"\\]|\\.)*")
    | (?P<LANGTAG>@[A-Za-z]+(?:-[A-Za-z0-9]+)*)
    | (?P<INTEGER>[0-9]+)
    | (?P<PNAME>(?:[A-Za-z_][A-Za-z0-9_.\-]*)?:[A-Za-z0-9_.\-]*)
    | (?P<NAME>[A-Za-z_][A-Za-z0-9_]*)
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos, line, col = 0, 1, 1
    n = len(text)
    while pos < n:
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup or ""
        lexeme = m.group()
        if kind not in ("WS", "COMMENT"):
            tokens.append(Token(kind, lexeme, line, col))
        newlines = lexeme.count("\n")
        if newlines:
            line += newlines
            col = len(lexeme) - lexeme.rfind("\n")
        else:
            col += len(lexeme)
        pos = m.end()
    tokens.append(Token("EOF", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens: list[Token], name: str):
        self.tokens = tokens
        self.pos = 0
        self.depth = 0
        self.name = name

    def peek(self, offset: int = 0) -> Token:
        i = min(self.pos + offset, len(self.tokens) - 1)
        return self.tokens[i]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "EOF":
            self.pos += 1
        if tok.kind == "LPAREN":
            self.depth += 1
        elif tok.kind == "RPAREN":
            self.depth -= 1
        return tok

    def error(self, message: str, tok: Token | None = None) -> "ParseError":
        tok = tok or self.peek()
        return ParseError(message, tok.line, tok.col)

    def expect(self, kind: str, what: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            found = tok.value or "end of file"
            raise self.error(f"expected {what}, found {found!r}")
        return self.advance()

    # ------------------------------------------------------------------
    # document structure

    def document(self) -> Document:
        prefixes = dict(DEFAULT_PREFIXES)
        while self.peek().kind == "NAME" and self.peek().value == "Prefix":
            self._prefix_declaration(prefixes)
        self.prefixes = prefixes
        if not (self.peek().kind == "NAME" and self.peek().value == "Ontology"):
            raise self.error("expected Ontology(...) block")
        self.advance()
        self.expect("LPAREN", "'(' after Ontology")
        # Optional ontology IRI and version IRI.
        seen = 0
        while self.peek().kind in ("IRIREF", "PNAME") and seen < 2:
            self._iri()
            seen += 1
        axioms: list[Tree] = []
        skipped = 0
        warnings: list[str] = []
        while self.peek().kind != "RPAREN":
            if self.peek().kind == "EOF":
                raise self.error("unexpected end of file inside Ontology(...)")
            kept = self._axiom(axioms, warnings)
            if not kept:
                skipped += 1
        self.advance()
        if self.peek().kind != "EOF":
            raise self.error("unexpected content after Ontology(...)")
        return Document(
            prefixes=prefixes,
            axioms=tuple(axioms),
            skipped=skipped,
            warnings=tuple(warnings),
            name=self.name,
        )

    def _prefix_declaration(self, prefixes: dict[str, str]) -> None:
        self.advance()
        self.expect("LPAREN", "'(' after Prefix")
        tok = self.expect("PNAME", "prefix name")
        if not tok.value.endswith(":"):
            raise self.error("prefix declaration must bind a bare prefix", tok)
        self.expect("EQUALS", "'=' in prefix declaration")
        iri = self.expect("IRIREF", "full IRI in prefix declaration")
        self.expect("RPAREN", "')' after prefix declaration")
        prefixes[tok.value[:-1]] = iri.value[1:-1]

    def _axiom(self, axioms: list[Tree], warnings: list[str]) -> bool:
        """Parse one axiom; return True when it was kept."""
        tok = self.peek()
        if tok.kind != "NAME":
            raise self.error(f"expected an axiom, found {tok.value!r}")
        outer = self.depth
        self.advance()
        self.expect("LPAREN", f"'(' after {tok.value}")
        if tok.value not in AXIOM_KINDS:
            self._skip_to_depth(outer)
            return False
        try:
            axioms.append(self._class_axiom(tok.value))
            return True
        except _Unsupported as u:
            self._skip_to_depth(outer)
            warnings.append(
                f"line {u.line}: skipped {tok.value} axiom: {u.reason}"
            )
            return False

    def _skip_to_depth(self, target: int) -> None:
        while self.depth > target:
            tok = self.advance()
            if tok.kind == "EOF":
                raise self.error("unbalanced parentheses", tok)

    # ------------------------------------------------------------------
    # axioms

    def _class_axiom(self, kind: str) -> Tree:
        self._skip_annotations()
        args: list[Tree] = []
        if kind == "SubClassOf":
            args.append(self._class_expression())
            args.append(self._class_expression())
        elif kind in ("EquivalentClasses", "DisjointClasses"):
            args.append(self._class_expression())
            args.append(self._class_expression())
            while self.peek().kind != "RPAREN":
                args.append(self._class_expression())
        else:  # DisjointUnion
            tok = self.peek()
            if tok.kind not in ("IRIREF", "PNAME"):
                raise self.error("expected a class IRI", tok)
            args.append(leaf(self._iri()))
            args.append(self._class_expression())
            args.append(self._class_expression())
            while self.peek().kind != "RPAREN":
                args.append(self._class_expression())
        self.expect("RPAREN", f"')' closing {kind}")
        return expr(kind, *args)

    def _skip_annotations(self) -> None:
        while (
            self.peek().kind == "NAME"
            and self.peek().value == "Annotation"
            and self.peek(1).kind == "LPAREN"
        ):
            outer = self.depth
            self.advance()
            self.advance()
            self._skip_to_depth(outer)

    # ------------------------------------------------------------------
    # class expressions

    def _class_expression(self) -> Tree:
        tok = self.peek()
        if tok.kind in ("IRIREF", "PNAME"):
            return leaf(self._iri())
        if tok.kind != "NAME":
            raise self.error("expected a class expression", tok)
        name = tok.value
        if name not in CLASS_CONSTRUCTORS:
            raise _Unsupported(f"unsupported constructor {name}", tok.line)
        self.advance()
        self.expect("LPAREN", f"'(' after {name}")
        args = self._constructor_arguments(name, tok)
        self.expect("RPAREN", f"')' closing {name}")
        return expr(name, *args)

    def _constructor_arguments(self, name: str, tok: Token) -> list[Tree]:
        args: list[Tree] = []
        if name in ("ObjectIntersectionOf", "ObjectUnionOf"):
            args.append(self._class_expression())
            args.append(self._class_expression())
            while self.peek().kind != "RPAREN":
                args.append(self._class_expression())
        elif name == "ObjectComplementOf":
            args.append(self._class_expression())
        elif name == "ObjectOneOf":
            args.append(self._individual())
            while self.peek().kind != "RPAREN":
                args.append(self._individual())
        elif name in ("ObjectSomeValuesFrom", "ObjectAllValuesFrom"):
            args.append(self._object_property())
            args.append(self._class_expression())
        elif name == "ObjectHasValue":
            args.append(self._object_property())
            args.append(self._individual())
        elif name == "ObjectHasSelf":
            args.append(self._object_property())
        elif name in (
            "ObjectMinCardinality",
            "ObjectMaxCardinality",
            "ObjectExactCardinality",
        ):
            args.append(self._cardinality())
            args.append(self._object_property())
            if self.peek().kind != "RPAREN":
                args.append(self._class_expression())
        elif name in ("DataSomeValuesFrom", "DataAllValuesFrom"):
            args.append(self._data_property())
            args.append(self._data_range())
            if self.peek().kind != "RPAREN":
                raise _Unsupported(
                    f"{name} over more than one property", tok.line
                )
        elif name == "DataHasValue":
            args.append(self._data_property())
            args.append(self._literal())
        else:  # data cardinality restrictions
            args.append(self._cardinality())
            args.append(self._data_property())
            if self.peek().kind != "RPAREN":
                args.append(self._data_range())
        return args

    def _object_property(self) -> Tree:
        tok = self.peek()
        if tok.kind in ("IRIREF", "PNAME"):
            return leaf(self._iri())
        if tok.kind == "NAME" and tok.value == "ObjectInverseOf":
            raise _Unsupported("inverse property expression", tok.line)
        raise self.error("expected an object property IRI", tok)

    def _data_property(self) -> Tree:
        tok = self.peek()
        if tok.kind in ("IRIREF", "PNAME"):
            return leaf(self._iri())
        raise self.error("expected a data property IRI", tok)

    def _data_range(self) -> Tree:
        tok = self.peek()
        if tok.kind in ("IRIREF", "PNAME"):
            return leaf(self._iri())
        if tok.kind == "NAME":
            raise _Unsupported(f"composite data range {tok.value}", tok.line)
        raise self.error("expected a datatype IRI", tok)

    def _individual(self) -> Tree:
        tok = self.peek()
        if tok.kind in ("IRIREF", "PNAME"):
            return leaf(self._iri())
        raise self.error("expected an individual IRI", tok)

    def _cardinality(self) -> Tree:
        tok = self.expect("INTEGER", "a non-negative integer")
        return leaf(tok.value)

    def _literal(self) -> Tree:
        tok = self.expect("STRING", "a literal")
        text = tok.value
        if self.peek().kind == "CARETS":
            self.advance()
            dtype = self._iri()
            return leaf(f'{text}^^<{dtype}>')
        if self.peek().kind == "LANGTAG":
            tag = self.advance()
            return leaf(text + tag.value)
        return leaf(text)

    def _iri(self) -> str:
        tok = self.peek()
        if tok.kind == "IRIREF":
            self.advance()
            return tok.value[1:-1]
        if tok.kind == "PNAME":
            self.advance()
            prefix, _, local = tok.value.partition(":")
            if prefix == "_":
                raise _Unsupported("anonymous individual", tok.line)
            if prefix not in self.prefixes:
                raise self.error(f"unknown prefix {prefix + ':'!r}", tok)
            return self.prefixes[prefix] + local
        raise self.error("expected an IRI", tok)


def parse_document(text: str, name: str = "") -> Document:
    """Parse one functional-syntax document from a string."""
    parser = _Parser(_tokenize(text), name)
    return parser.document()


def parse_file(path) -> Document:
    """Parse a UTF-8 ``.ofn`` file; the document takes the file's name."""
    import pathlib

    p = pathlib.Path(path)
    return parse_document(p.read_text(encoding="utf-8"), name=p.name)


def deduplicate(doc: Document) -> Document:
    """Drop repeated axioms, keeping the first occurrence of each."""
    seen: set[str] = set()
    kept: list[Tree] = []
    for axiom in doc.axioms:
        if axiom.encoding not in seen:
            seen.add(axiom.encoding)
            kept.append(axiom)
    return replace(doc, axioms=tuple(kept))


def render_axiom(t: Tree) -> str:
    """Write a concrete axiom tree back as functional syntax.

    IRIs come out in full ``<...>`` form, so the output needs no prefix
    declarations and reparses to an equal tree.
    """
    if t.is_leaf:
        return _render_token(t.label)
    parts = " ".join(render_axiom(c) for c in semantic_children(t))
    return f"{t.label}({parts})"


def _render_token(label: str) -> str:
    if label.startswith('"') or label.isdigit():
        return label
    return f"<{label}>"


def render_document(doc: Document) -> str:
    """Write a document back as a minimal functional-syntax file."""
    lines = ["Ontology("]
    lines.extend("  " + render_axiom(a) for a in doc.axioms)
    lines.append(")")
    return "\n".join(lines) + "\n"
