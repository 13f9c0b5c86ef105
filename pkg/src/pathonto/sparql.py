"""SELECT-only SPARQL subset: DISTINCT, FROM, basic graph patterns, LIMIT.

OPTIONAL / FILTER / UNION / ORDER BY and friends are rejected by name.
Evaluation greedily orders patterns by selectivity (bound-position count,
then an index cardinality probe) and runs a nested index join; results
come back in a deterministic sorted order, so LIMIT k is always a prefix
of LIMIT k+1.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from pathonto.errors import QuerySyntaxError, UnsupportedFeatureError
from pathonto.rdf.model import BlankNode, Graph, Iri, Literal, Term, term_sort_key
from pathonto.rdf.vocab import RDF_NS, WELL_KNOWN_PREFIXES

UNSUPPORTED_KEYWORDS = {
    "OPTIONAL": "OPTIONAL",
    "FILTER": "FILTER",
    "UNION": "UNION",
    "ORDER": "ORDER BY",
    "GROUP": "GROUP BY",
    "HAVING": "HAVING",
    "MINUS": "MINUS",
    "GRAPH": "GRAPH",
    "SERVICE": "SERVICE",
    "BIND": "BIND",
    "VALUES": "VALUES",
    "ASK": "ASK",
    "CONSTRUCT": "CONSTRUCT",
    "DESCRIBE": "DESCRIBE",
    "INSERT": "INSERT",
    "DELETE": "DELETE",
    "OFFSET": "OFFSET",
}


@dataclass(frozen=True)
class Variable:
    name: str

    def __str__(self) -> str:
        return f"?{self.name}"


@dataclass(frozen=True)
class TriplePattern:
    """Positions hold a Variable, an Iri, or a Literal."""

    subject: object
    predicate: object
    object: object

    def positions(self):
        return (self.subject, self.predicate, self.object)

    def variables(self) -> set[str]:
        return {t.name for t in self.positions() if isinstance(t, Variable)}

    def ground_count(self) -> int:
        return sum(1 for t in self.positions() if not isinstance(t, Variable))


@dataclass
class QueryAst:
    select_vars: list[str]
    distinct: bool
    from_graph: Iri | None
    patterns: list[TriplePattern]
    limit: int | None = None


@dataclass
class ResultTable:
    header: list[str]
    rows: list[tuple[Term, ...]] = field(default_factory=list)

    def to_json(self) -> str:
        bindings = []
        for row in self.rows:
            binding = {}
            for var, term in zip(self.header, row):
                binding[var] = _json_term(term)
            bindings.append(binding)
        return json.dumps(
            {"head": {"vars": list(self.header)}, "results": {"bindings": bindings}},
            indent=2,
        )

    def to_tsv(self) -> str:
        lines = ["\t".join(f"?{v}" for v in self.header)]
        for row in self.rows:
            lines.append("\t".join(_tsv_term(t) for t in row))
        return "\n".join(lines) + "\n"


def _json_term(term: Term) -> dict:
    if isinstance(term, Iri):
        return {"type": "uri", "value": term.value}
    if isinstance(term, BlankNode):
        return {"type": "bnode", "value": term.label}
    out: dict = {"type": "literal", "value": term.lexical}
    if term.language:
        out["xml:lang"] = term.language
    if term.datatype:
        out["datatype"] = term.datatype.value
    return out


def _tsv_term(term: Term) -> str:
    if isinstance(term, Iri):
        return f"<{term.value}>"
    if isinstance(term, BlankNode):
        return f"_:{term.label}"
    body = term.lexical.replace("\\", "\\\\").replace('"', '\\"')
    body = body.replace("\n", "\\n").replace("\r", "\\r").replace("\t", "\\t")
    if term.language:
        return f'"{body}"@{term.language}'
    if term.datatype:
        return f'"{body}"^^<{term.datatype.value}>'
    return f'"{body}"'


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
      (?P<ws>\s+|\#[^\n]*)
    | (?P<iriref><[^<>\s]*>)
    | (?P<string>"(?:[^"\\\n]|\\.)*")
    | (?P<langtag>@[A-Za-z]+(?:-[A-Za-z0-9]+)*)
    | (?P<var>[?$][A-Za-z_][A-Za-z0-9_]*)
    | (?P<pname>[A-Za-z][A-Za-z0-9_-]*:[A-Za-z0-9_][A-Za-z0-9_.-]*|[A-Za-z][A-Za-z0-9_-]*:)
    | (?P<word>[A-Za-z][A-Za-z0-9_]*)
    | (?P<int>\d+)
    | (?P<punct>\^\^|[{}.,;*()])
    """,
    re.VERBOSE,
)

_STRING_ESCAPES = {
    "t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f",
    '"': '"', "'": "'", "\\": "\\",
}


class _QueryToken:
    __slots__ = ("kind", "value", "line", "col")

    def __init__(self, kind, value, line, col):
        self.kind = kind
        self.value = value
        self.line = line
        self.col = col


def _tokenize(text: str) -> list[_QueryToken]:
    tokens = []
    pos = 0
    line, col = 1, 1
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise QuerySyntaxError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        raw = m.group(0)
        end = m.end()
        if kind == "pname":
            # A trailing dot terminates the pattern instead.
            while raw.endswith("."):
                raw = raw[:-1]
                end -= 1
        if kind != "ws":
            tokens.append(_QueryToken(kind, raw, line, col))
        newlines = raw.count("\n")
        if newlines:
            line += newlines
            col = len(raw) - raw.rfind("\n")
        else:
            col += len(raw)
        pos = end
    tokens.append(_QueryToken("eof", "", line, col))
    return tokens


def _unescape(body: str, line: int, col: int) -> str:
    out = []
    i = 0
    while i < len(body):
        c = body[i]
        if c != "\\":
            out.append(c)
            i += 1
            continue
        e = body[i + 1]
        if e in _STRING_ESCAPES:
            out.append(_STRING_ESCAPES[e])
            i += 2
        elif e in "uU":
            width = 4 if e == "u" else 8
            out.append(chr(int(body[i + 2 : i + 2 + width], 16)))
            i += 2 + width
        else:
            raise QuerySyntaxError(f"unknown escape \\{e}", line, col)
    return "".join(out)


class _QueryParser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.prefixes = dict(WELL_KNOWN_PREFIXES)
        # Reject recognized-but-unsupported features up front, wherever
        # they appear; keywords cannot occur inside the supported grammar.
        for tok in self.tokens:
            self._check_unsupported(tok)

    @property
    def current(self) -> _QueryToken:
        return self.tokens[self.pos]

    def _error(self, message: str) -> QuerySyntaxError:
        return QuerySyntaxError(message, self.current.line, self.current.col)

    def _next(self) -> _QueryToken:
        tok = self.current
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def _is_word(self, *words: str) -> bool:
        return self.current.kind == "word" and self.current.value.upper() in words

    def _check_unsupported(self, tok: _QueryToken) -> None:
        if tok.kind == "word" and tok.value.upper() in UNSUPPORTED_KEYWORDS:
            raise UnsupportedFeatureError(UNSUPPORTED_KEYWORDS[tok.value.upper()])

    def parse(self) -> QueryAst:
        while self._is_word("PREFIX"):
            self._prefix()
        if not self._is_word("SELECT"):
            raise self._error("expected SELECT")
        self._next()
        distinct = False
        if self._is_word("DISTINCT"):
            distinct = True
            self._next()
        if self.current.kind == "punct" and self.current.value == "*":
            raise UnsupportedFeatureError("SELECT *")
        select_vars = self._select_vars()
        from_graph = None
        if self._is_word("FROM"):
            self._next()
            from_graph = self._iri(self._next())
        if self._is_word("WHERE"):
            self._next()
        patterns = self._group_graph_pattern()
        limit = self._limit()
        if self.current.kind != "eof":
            raise self._error(f"unexpected trailing input {self.current.value!r}")
        ast = QueryAst(select_vars, distinct, from_graph, patterns, limit)
        self._validate(ast)
        return ast

    def _prefix(self) -> None:
        self._next()
        tok = self._next()
        if tok.kind != "pname" or not tok.value.endswith(":"):
            raise QuerySyntaxError("expected a prefix name ending in ':'", tok.line, tok.col)
        prefix = tok.value[:-1]
        iri_tok = self._next()
        if iri_tok.kind != "iriref":
            raise QuerySyntaxError("expected an IRI", iri_tok.line, iri_tok.col)
        self.prefixes[prefix] = iri_tok.value[1:-1]

    def _select_vars(self) -> list[str]:
        out: list[str] = []
        while True:
            if self.current.kind == "var":
                out.append(self._next().value[1:])
                if self.current.kind == "punct" and self.current.value == ",":
                    self._next()
                continue
            break
        if not out:
            raise self._error("SELECT needs at least one variable")
        return out

    def _iri(self, tok: _QueryToken) -> Iri:
        if tok.kind == "iriref":
            try:
                return Iri(tok.value[1:-1])
            except ValueError as exc:
                raise QuerySyntaxError(str(exc), tok.line, tok.col) from exc
        if tok.kind == "pname":
            prefix, _, local = tok.value.partition(":")
            if prefix not in self.prefixes:
                raise QuerySyntaxError(f"undefined prefix {prefix!r}", tok.line, tok.col)
            return Iri(self.prefixes[prefix] + local)
        raise QuerySyntaxError("expected an IRI", tok.line, tok.col)

    def _group_graph_pattern(self) -> list[TriplePattern]:
        if not (self.current.kind == "punct" and self.current.value == "{"):
            raise self._error("expected '{'")
        self._next()
        patterns: list[TriplePattern] = []
        while not (self.current.kind == "punct" and self.current.value == "}"):
            if self.current.kind == "eof":
                raise self._error("unterminated group: expected '}'")
            patterns.append(self._triple_pattern())
            if self.current.kind == "punct" and self.current.value == ".":
                self._next()
        self._next()
        return patterns

    def _triple_pattern(self) -> TriplePattern:
        s = self._pattern_term(allow_literal=False)
        p = self._pattern_term(allow_literal=False, allow_a=True)
        o = self._pattern_term(allow_literal=True)
        return TriplePattern(s, p, o)

    def _pattern_term(self, allow_literal: bool, allow_a: bool = False):
        tok = self._next()
        if tok.kind == "var":
            return Variable(tok.value[1:])
        if allow_a and tok.kind == "word" and tok.value == "a":
            return Iri(RDF_NS + "type")
        if tok.kind == "string":
            if not allow_literal:
                raise QuerySyntaxError("literal not allowed here", tok.line, tok.col)
            lexical = _unescape(tok.value[1:-1], tok.line, tok.col)
            if self.current.kind == "langtag":
                return Literal(lexical, language=self._next().value[1:])
            if self.current.kind == "punct" and self.current.value == "^^":
                self._next()
                return Literal(lexical, datatype=self._iri(self._next()))
            return Literal(lexical)
        return self._iri(tok)

    def _limit(self) -> int | None:
        if not self._is_word("LIMIT"):
            return None
        self._next()
        tok = self._next()
        if tok.kind != "int" or int(tok.value) <= 0:
            raise QuerySyntaxError("LIMIT expects a positive integer", tok.line, tok.col)
        return int(tok.value)

    def _validate(self, ast: QueryAst) -> None:
        if not ast.patterns:
            raise self._error("empty graph pattern")
        pattern_vars = set()
        for pattern in ast.patterns:
            pattern_vars |= pattern.variables()
        for var in ast.select_vars:
            if var not in pattern_vars:
                raise self._error(f"selected variable ?{var} does not occur in any pattern")
        # Cost guard: a fully disconnected all-variable query would
        # enumerate the whole cross product of the store.
        any_ground = any(p.ground_count() for p in ast.patterns)
        counts: dict[str, int] = {}
        for pattern in ast.patterns:
            for term in pattern.positions():
                if isinstance(term, Variable):
                    counts[term.name] = counts.get(term.name, 0) + 1
        any_shared = any(n > 1 for n in counts.values())
        if not any_ground and not any_shared:
            raise self._error(
                "cost guard: query has no ground term and no shared variable"
            )


def parse_query(text: str) -> QueryAst:
    """Parse a query into its AST.

    Malformed input raises QuerySyntaxError with a position; recognized
    but unsupported features raise UnsupportedFeatureError by name.
    """
    if not text.strip():
        raise QuerySyntaxError("empty query", 1, 1)
    return _QueryParser(text).parse()


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------

def _bound(term, binding: dict):
    if isinstance(term, Variable):
        return binding.get(term.name)
    return term


def _selectivity(pattern: TriplePattern, bound_vars: set[str], g: Graph) -> tuple:
    bound_positions = sum(
        1
        for t in pattern.positions()
        if not isinstance(t, Variable) or t.name in bound_vars
    )
    s = pattern.subject if not isinstance(pattern.subject, Variable) else None
    p = pattern.predicate if not isinstance(pattern.predicate, Variable) else None
    o = pattern.object if not isinstance(pattern.object, Variable) else None
    cardinality = g.count_matches(s, p, o)
    return (-bound_positions, cardinality)


def _order_patterns(patterns: list[TriplePattern], g: Graph) -> list[TriplePattern]:
    remaining = list(patterns)
    ordered: list[TriplePattern] = []
    bound: set[str] = set()
    while remaining:
        best_index = min(
            range(len(remaining)),
            key=lambda i: _selectivity(remaining[i], bound, g) + (i,),
        )
        chosen = remaining.pop(best_index)
        ordered.append(chosen)
        bound |= chosen.variables()
    return ordered


def evaluate(q: QueryAst, g: Graph) -> ResultTable:
    """All BGP solutions projected onto the select list.

    Row order is deterministic (sorted by cell); DISTINCT deduplicates
    before the limit is applied, so a limited result is a prefix of the
    unlimited one.
    """
    ordered = _order_patterns(q.patterns, g)
    solutions: list[dict] = [{}]
    for pattern in ordered:
        next_solutions: list[dict] = []
        for binding in solutions:
            s = _bound(pattern.subject, binding)
            p = _bound(pattern.predicate, binding)
            o = _bound(pattern.object, binding)
            if isinstance(s, Literal) or isinstance(p, (Literal, BlankNode)):
                continue  # a variable bound to a term this slot cannot hold
            for triple in g.iter_matches(s, p, o):
                extended = dict(binding)
                ok = True
                for term, value in zip(
                    pattern.positions(), (triple.subject, triple.predicate, triple.object)
                ):
                    if isinstance(term, Variable):
                        known = extended.get(term.name)
                        if known is None:
                            extended[term.name] = value
                        elif known != value:
                            ok = False
                            break
                if ok:
                    next_solutions.append(extended)
        solutions = next_solutions
        if not solutions:
            break
    rows = [tuple(sol[v] for v in q.select_vars) for sol in solutions]
    if q.distinct:
        rows = list(set(rows))
    rows.sort(key=lambda row: tuple(term_sort_key(c) for c in row))
    if q.limit is not None:
        rows = rows[: q.limit]
    return ResultTable(header=list(q.select_vars), rows=rows)
