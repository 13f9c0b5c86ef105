"""RDF terms, triples, and the indexed in-memory graph.

The graph keeps three access paths (subject-, predicate-, and object-keyed)
so any partially bound triple pattern resolves through the index whose bound
prefix is longest. Graphs are mutable while being built and immutable after
``freeze()``; all read operations are side-effect free.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from pathonto.errors import FrozenGraphError

_FORBIDDEN_IRI_CHARS = set(' <>"{}|^`\\\n\r\t')


@dataclass(frozen=True, slots=True)
class Iri:
    """An absolute IRI. Equality is byte-equality of the text."""

    value: str

    def __post_init__(self) -> None:
        if not self.value:
            raise ValueError("IRI must be non-empty")
        if "://" not in self.value:
            raise ValueError(f"IRI must be absolute (missing scheme): {self.value!r}")
        bad = _FORBIDDEN_IRI_CHARS.intersection(self.value)
        if bad:
            raise ValueError(f"IRI contains forbidden characters {sorted(bad)}: {self.value!r}")

    def __str__(self) -> str:
        return self.value

    @property
    def local_name(self) -> str:
        """Text after the last '#' or '/', e.g. ``HINO_0000001``."""
        v = self.value
        for sep in ("#", "/"):
            if sep in v:
                tail = v.rsplit(sep, 1)[1]
                if sep == "#" or tail:
                    return tail
        return v


@dataclass(frozen=True, slots=True)
class BlankNode:
    """A blank node with a document-scoped label (without the ``_:`` sigil)."""

    label: str

    def __str__(self) -> str:
        return f"_:{self.label}"


@dataclass(frozen=True, slots=True)
class Literal:
    """An RDF literal; language tag and datatype are mutually exclusive."""

    lexical: str
    datatype: Iri | None = None
    language: str | None = None

    def __post_init__(self) -> None:
        if self.datatype is not None and self.language is not None:
            raise ValueError("literal cannot carry both a datatype and a language tag")

    def __str__(self) -> str:
        if self.language:
            return f'"{self.lexical}"@{self.language}'
        if self.datatype:
            return f'"{self.lexical}"^^<{self.datatype.value}>'
        return f'"{self.lexical}"'


Subject = Union[Iri, BlankNode]
Term = Union[Iri, BlankNode, Literal]


def term_sort_key(term: Term) -> tuple:
    """Canonical total order: IRIs, then blank nodes, then literals."""
    if isinstance(term, Iri):
        return (0, term.value)
    if isinstance(term, BlankNode):
        return (1, term.label)
    return (2, term.lexical, term.datatype.value if term.datatype else "", term.language or "")


@dataclass(frozen=True, slots=True)
class Triple:
    subject: Subject
    predicate: Iri
    object: Term

    def __post_init__(self) -> None:
        if not isinstance(self.predicate, Iri):
            raise ValueError("triple predicate must be an IRI")
        if isinstance(self.subject, Literal):
            raise ValueError("triple subject cannot be a literal")

    def sort_key(self) -> tuple:
        return (
            term_sort_key(self.subject),
            term_sort_key(self.predicate),
            term_sort_key(self.object),
        )


class Graph:
    """A set of triples with SPO, POS, and OSP indexes.

    Set semantics: adding a duplicate triple leaves the size unchanged.
    """

    __slots__ = ("_triples", "_spo", "_pos", "_osp", "_frozen")

    def __init__(self, triples: Iterable[Triple] = ()):
        self._triples: set[Triple] = set()
        self._spo: dict[Subject, dict[Iri, set[Term]]] = {}
        self._pos: dict[Iri, dict[Term, set[Subject]]] = {}
        self._osp: dict[Term, dict[Subject, set[Iri]]] = {}
        self._frozen = False
        for t in triples:
            self.add(t)

    # -- construction --------------------------------------------------

    def add(self, triple: Triple) -> None:
        if self._frozen:
            raise FrozenGraphError("graph is sealed; create a copy to modify it")
        if triple in self._triples:
            return
        self._triples.add(triple)
        s, p, o = triple.subject, triple.predicate, triple.object
        self._spo.setdefault(s, {}).setdefault(p, set()).add(o)
        self._pos.setdefault(p, {}).setdefault(o, set()).add(s)
        self._osp.setdefault(o, {}).setdefault(s, set()).add(p)

    def update(self, triples: Iterable[Triple]) -> None:
        for t in triples:
            self.add(t)

    def freeze(self) -> "Graph":
        """Seal the graph; it is then safely shareable across readers."""
        self._frozen = True
        return self

    @property
    def frozen(self) -> bool:
        return self._frozen

    def copy(self) -> "Graph":
        """An unfrozen graph with the same triple set."""
        return Graph(self._triples)

    # -- basic protocol -------------------------------------------------

    def __len__(self) -> int:
        return len(self._triples)

    def __contains__(self, triple: Triple) -> bool:
        return triple in self._triples

    def __iter__(self) -> Iterator[Triple]:
        return iter(self._triples)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._triples == other._triples

    def __repr__(self) -> str:
        state = "frozen" if self._frozen else "open"
        return f"<Graph {len(self._triples)} triples, {state}>"

    @property
    def triples(self) -> frozenset[Triple]:
        return frozenset(self._triples)

    def sorted_triples(self) -> list[Triple]:
        return sorted(self._triples, key=Triple.sort_key)

    # -- matching --------------------------------------------------------

    def match(
        self,
        s: Subject | None = None,
        p: Iri | None = None,
        o: Term | None = None,
    ) -> list[Triple]:
        """Triples agreeing with every bound position, in canonical order.

        Dispatches to the index whose bound prefix is longest; a fully
        bound pattern is a membership probe.
        """
        return sorted(self._match_iter(s, p, o), key=Triple.sort_key)

    def _match_iter(self, s, p, o) -> Iterator[Triple]:
        if s is not None and p is not None and o is not None:
            t = Triple(s, p, o)
            if t in self._triples:
                yield t
        elif s is not None and p is not None:
            for obj in self._spo.get(s, {}).get(p, ()):
                yield Triple(s, p, obj)
        elif p is not None and o is not None:
            for subj in self._pos.get(p, {}).get(o, ()):
                yield Triple(subj, p, o)
        elif s is not None and o is not None:
            for pred in self._osp.get(o, {}).get(s, ()):
                yield Triple(s, pred, o)
        elif s is not None:
            for pred, objs in self._spo.get(s, {}).items():
                for obj in objs:
                    yield Triple(s, pred, obj)
        elif p is not None:
            for obj, subjs in self._pos.get(p, {}).items():
                for subj in subjs:
                    yield Triple(subj, p, obj)
        elif o is not None:
            for subj, preds in self._osp.get(o, {}).items():
                for pred in preds:
                    yield Triple(subj, pred, o)
        else:
            yield from self._triples

    def iter_matches(self, s=None, p=None, o=None) -> Iterator[Triple]:
        """Like ``match`` but unordered, for callers that sort later."""
        return self._match_iter(s, p, o)

    def count_matches(self, s=None, p=None, o=None) -> int:
        """Cardinality of ``match`` without materializing the sort."""
        return sum(1 for _ in self._match_iter(s, p, o))

    # -- convenience lookups ----------------------------------------------

    def objects(self, s: Subject, p: Iri) -> list[Term]:
        return sorted(self._spo.get(s, {}).get(p, ()), key=term_sort_key)

    def subjects(self, p: Iri, o: Term) -> list[Subject]:
        return sorted(self._pos.get(p, {}).get(o, ()), key=term_sort_key)

    def value(self, s: Subject, p: Iri) -> Term | None:
        """First object for (s, p) in canonical order, or None."""
        objs = self._spo.get(s, {}).get(p)
        if not objs:
            return None
        return min(objs, key=term_sort_key)

    def terms(self) -> set[Term]:
        """Every term occurring in any position."""
        out: set[Term] = set()
        for t in self._triples:
            out.add(t.subject)
            out.add(t.predicate)
            out.add(t.object)
        return out
