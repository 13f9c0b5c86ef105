"""Turtle reader and canonical writer.

The reader covers @prefix directives, the ``a`` shorthand, predicate lists
(``;``), object lists (``,``), blank node labels, and quoted literals with
optional language tag or datatype. Collections and ``[...]`` property lists
are out of profile and rejected with a position.

The writer is the repo-wide normal form: a fixed prefix header, subjects
grouped and sorted, predicates sorted by IRI text, objects sorted by kind
then text. Equal graphs serialize to identical bytes.
"""

from __future__ import annotations

import re

from pathonto.errors import TurtleSyntaxError, UndefinedPrefixError
from pathonto.rdf.model import (
    BlankNode,
    Graph,
    Iri,
    Literal,
    Term,
    Triple,
    term_sort_key,
)
from pathonto.rdf.vocab import RDF_NS, WELL_KNOWN_PREFIXES

RDF_TYPE_IRI = RDF_NS + "type"

# ---------------------------------------------------------------------------
# Tokenizer
# ---------------------------------------------------------------------------

_IRIREF = "iriref"
_PNAME = "pname"
_BNODE = "bnode"
_STRING = "string"
_LANGTAG = "langtag"
_PUNCT = "punct"
_KEYWORD = "keyword"
_A = "a"
_EOF = "eof"

_ESCAPES = {
    "t": "\t",
    "b": "\b",
    "n": "\n",
    "r": "\r",
    "f": "\f",
    '"': '"',
    "'": "'",
    "\\": "\\",
}

_PNAME_RE = re.compile(r"([A-Za-z][A-Za-z0-9_-]*)?:([A-Za-z0-9_][A-Za-z0-9_.-]*)?")
_LANG_RE = re.compile(r"@([A-Za-z]+(?:-[A-Za-z0-9]+)*)")


class _Token:
    __slots__ = ("kind", "value", "line", "col")

    def __init__(self, kind: str, value, line: int, col: int):
        self.kind = kind
        self.value = value
        self.line = line
        self.col = col


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1

    def error(self, message: str) -> TurtleSyntaxError:
        return TurtleSyntaxError(message, self.line, self.col)

    def _advance(self, n: int = 1) -> None:
        for _ in range(n):
            if self.pos < len(self.text) and self.text[self.pos] == "\n":
                self.line += 1
                self.col = 1
            else:
                self.col += 1
            self.pos += 1

    def _skip_ws(self) -> None:
        while self.pos < len(self.text):
            c = self.text[self.pos]
            if c in " \t\r\n":
                self._advance()
            elif c == "#":
                while self.pos < len(self.text) and self.text[self.pos] != "\n":
                    self._advance()
            else:
                return

    def tokens(self):
        while True:
            self._skip_ws()
            line, col = self.line, self.col
            if self.pos >= len(self.text):
                yield _Token(_EOF, None, line, col)
                return
            c = self.text[self.pos]
            if c == "<":
                yield self._iriref(line, col)
            elif c == '"':
                yield self._string(line, col)
            elif c == "_" and self.text.startswith("_:", self.pos):
                yield self._bnode(line, col)
            elif c == "@":
                yield self._at(line, col)
            elif c in ".;,":
                self._advance()
                yield _Token(_PUNCT, c, line, col)
            elif self.text.startswith("^^", self.pos):
                self._advance(2)
                yield _Token(_PUNCT, "^^", line, col)
            else:
                yield self._name(line, col)

    def _iriref(self, line, col) -> _Token:
        end = self.text.find(">", self.pos + 1)
        if end == -1:
            raise self.error("unterminated IRI reference")
        raw = self.text[self.pos + 1 : end]
        if "\n" in raw:
            raise self.error("newline inside IRI reference")
        self._advance(end + 1 - self.pos)
        return _Token(_IRIREF, raw, line, col)

    def _string(self, line, col) -> _Token:
        if self.text.startswith('"""', self.pos):
            raise self.error("long string literals are not supported")
        self._advance()
        out: list[str] = []
        while True:
            if self.pos >= len(self.text):
                raise self.error("unterminated string literal")
            c = self.text[self.pos]
            if c == '"':
                self._advance()
                break
            if c == "\n":
                raise self.error("newline inside string literal (use \\n)")
            if c == "\\":
                self._advance()
                if self.pos >= len(self.text):
                    raise self.error("dangling escape at end of input")
                e = self.text[self.pos]
                if e in _ESCAPES:
                    out.append(_ESCAPES[e])
                    self._advance()
                elif e == "u" or e == "U":
                    width = 4 if e == "u" else 8
                    hexpart = self.text[self.pos + 1 : self.pos + 1 + width]
                    if len(hexpart) != width or not all(h in "0123456789abcdefABCDEF" for h in hexpart):
                        raise self.error(f"malformed \\{e} escape")
                    out.append(chr(int(hexpart, 16)))
                    self._advance(1 + width)
                else:
                    raise self.error(f"unknown escape \\{e}")
            else:
                out.append(c)
                self._advance()
        return _Token(_STRING, "".join(out), line, col)

    def _bnode(self, line, col) -> _Token:
        m = re.compile(r"_:([A-Za-z0-9][A-Za-z0-9_.-]*)").match(self.text, self.pos)
        if not m:
            raise self.error("malformed blank node label")
        self._advance(m.end() - self.pos)
        return _Token(_BNODE, m.group(1), line, col)

    def _at(self, line, col) -> _Token:
        if self.text.startswith("@prefix", self.pos):
            self._advance(len("@prefix"))
            return _Token(_KEYWORD, "@prefix", line, col)
        if self.text.startswith("@base", self.pos):
            raise self.error("@base is not supported")
        m = _LANG_RE.match(self.text, self.pos)
        if not m:
            raise self.error("malformed language tag")
        self._advance(m.end() - self.pos)
        return _Token(_LANGTAG, m.group(1), line, col)

    def _name(self, line, col) -> _Token:
        m = _PNAME_RE.match(self.text, self.pos)
        if m and m.end() > self.pos and ":" in self.text[self.pos : m.end()]:
            # Strip a trailing dot: it terminates the statement instead.
            end = m.end()
            while end > self.pos and self.text[end - 1] == ".":
                end -= 1
            prefix, local = self.text[self.pos : end].split(":", 1)
            self._advance(end - self.pos)
            return _Token(_PNAME, (prefix, local), line, col)
        m = re.compile(r"[A-Za-z]+").match(self.text, self.pos)
        if m and m.group(0) == "a":
            self._advance()
            return _Token(_A, "a", line, col)
        raise self.error(f"unexpected character {self.text[self.pos]!r}")


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self._tokens = _Lexer(text).tokens()
        self.current = next(self._tokens)
        self.prefixes: dict[str, str] = {}
        self.graph = Graph()

    def _error(self, message: str) -> TurtleSyntaxError:
        return TurtleSyntaxError(message, self.current.line, self.current.col)

    def _next(self) -> _Token:
        tok = self.current
        self.current = next(self._tokens)
        return tok

    def _expect_punct(self, value: str) -> None:
        if self.current.kind != _PUNCT or self.current.value != value:
            raise self._error(f"expected {value!r}")
        self._next()

    def parse(self) -> Graph:
        while self.current.kind != _EOF:
            if self.current.kind == _KEYWORD and self.current.value == "@prefix":
                self._prefix_directive()
            else:
                self._triples()
        return self.graph

    def _prefix_directive(self) -> None:
        self._next()
        if self.current.kind != _PNAME or self.current.value[1] != "":
            raise self._error("expected a prefix name ending in ':'")
        prefix = self.current.value[0]
        self._next()
        if self.current.kind != _IRIREF:
            raise self._error("expected an IRI after the prefix name")
        self.prefixes[prefix] = self.current.value
        self._next()
        self._expect_punct(".")

    def _expand(self, prefix: str, local: str, tok: _Token) -> Iri:
        if prefix not in self.prefixes:
            raise UndefinedPrefixError(prefix + ":", tok.line, tok.col)
        try:
            return Iri(self.prefixes[prefix] + local)
        except ValueError as exc:
            raise TurtleSyntaxError(str(exc), tok.line, tok.col) from exc

    def _iri_from(self, tok: _Token) -> Iri:
        if tok.kind == _IRIREF:
            try:
                return Iri(tok.value)
            except ValueError as exc:
                raise TurtleSyntaxError(str(exc), tok.line, tok.col) from exc
        if tok.kind == _PNAME:
            return self._expand(tok.value[0], tok.value[1], tok)
        raise TurtleSyntaxError("expected an IRI", tok.line, tok.col)

    def _triples(self) -> None:
        subj_tok = self._next()
        if subj_tok.kind == _BNODE:
            subject = BlankNode(subj_tok.value)
        else:
            subject = self._iri_from(subj_tok)
        while True:
            pred_tok = self._next()
            if pred_tok.kind == _A:
                predicate = Iri(RDF_TYPE_IRI)
            else:
                predicate = self._iri_from(pred_tok)
            while True:
                obj = self._object()
                self.graph.add(Triple(subject, predicate, obj))
                if self.current.kind == _PUNCT and self.current.value == ",":
                    self._next()
                    continue
                break
            if self.current.kind == _PUNCT and self.current.value == ";":
                self._next()
                # A ';' may be trailing, directly before the '.'.
                if self.current.kind == _PUNCT and self.current.value == ".":
                    break
                continue
            break
        self._expect_punct(".")

    def _object(self) -> Term:
        tok = self._next()
        if tok.kind == _BNODE:
            return BlankNode(tok.value)
        if tok.kind == _STRING:
            lexical = tok.value
            if self.current.kind == _LANGTAG:
                lang = self._next().value
                return Literal(lexical, language=lang)
            if self.current.kind == _PUNCT and self.current.value == "^^":
                self._next()
                dtype = self._iri_from(self._next())
                return Literal(lexical, datatype=dtype)
            return Literal(lexical)
        return self._iri_from(tok)


def parse_turtle(data: bytes | str) -> Graph:
    """Parse Turtle into a graph; blank node labels are kept verbatim."""
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# Serializer
# ---------------------------------------------------------------------------

_LOCAL_OK = re.compile(r"[A-Za-z_][A-Za-z0-9_-]*\Z")

_SORTED_PREFIXES = sorted(WELL_KNOWN_PREFIXES.items())
_NS_BY_LENGTH = sorted(WELL_KNOWN_PREFIXES.items(), key=lambda kv: -len(kv[1]))


def _escape(text: str) -> str:
    out: list[str] = []
    for c in text:
        if c == "\\":
            out.append("\\\\")
        elif c == '"':
            out.append('\\"')
        elif c == "\n":
            out.append("\\n")
        elif c == "\r":
            out.append("\\r")
        elif c == "\t":
            out.append("\\t")
        elif ord(c) < 0x20 or ord(c) == 0x7F:
            out.append(f"\\u{ord(c):04X}")
        else:
            out.append(c)
    return "".join(out)


def _render_iri(iri: Iri) -> str:
    for prefix, ns in _NS_BY_LENGTH:
        if iri.value.startswith(ns):
            local = iri.value[len(ns):]
            if _LOCAL_OK.match(local):
                return f"{prefix}:{local}"
    return f"<{iri.value}>"


def _render_term(term: Term) -> str:
    if isinstance(term, Iri):
        return _render_iri(term)
    if isinstance(term, BlankNode):
        return f"_:{term.label}"
    lit = f'"{_escape(term.lexical)}"'
    if term.language:
        return f"{lit}@{term.language}"
    if term.datatype:
        return f"{lit}^^{_render_iri(term.datatype)}"
    return lit


def _render_predicate(iri: Iri) -> str:
    if iri.value == RDF_TYPE_IRI:
        return "a"
    return _render_iri(iri)


def serialize_turtle(g: Graph) -> bytes:
    """Canonical Turtle bytes: equal graphs produce identical output."""
    lines: list[str] = [f"@prefix {p}: <{ns}> ." for p, ns in _SORTED_PREFIXES]
    lines.append("")
    by_subject: dict = {}
    for t in g:
        by_subject.setdefault(t.subject, {}).setdefault(t.predicate, []).append(t.object)
    for subject in sorted(by_subject, key=term_sort_key):
        pred_map = by_subject[subject]
        parts: list[str] = []
        for predicate in sorted(pred_map, key=term_sort_key):
            objects = sorted(pred_map[predicate], key=term_sort_key)
            rendered = ", ".join(_render_term(o) for o in objects)
            parts.append(f"{_render_predicate(predicate)} {rendered}")
        subj = _render_term(subject)
        body = " ;\n    ".join(parts)
        lines.append(f"{subj} {body} .")
    return ("\n".join(lines) + "\n").encode("utf-8")
