"""Linked-data term pages: hierarchy chains, asserted axioms, reverse uses.

Axioms render in the ``property some Filler`` text form a browser shows;
labels fall back to the IRI's local name when a graph omits them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from pathonto.errors import TermNotFoundError
from pathonto.rdf.model import BlankNode, Graph, Iri, Literal, Subject
from pathonto.rdf.vocab import (
    DB_XREF,
    OWL_CLASS,
    OWL_ON_PROPERTY,
    OWL_RESTRICTION,
    OWL_SOME_VALUES_FROM,
    RDF_TYPE,
    RDFS_LABEL,
    RDFS_SUBCLASSOF,
)


@dataclass
class TermPage:
    iri: Iri
    label: str
    hierarchy_paths: list[list[Iri]] = field(default_factory=list)
    named_superclasses: list[Iri] = field(default_factory=list)
    restrictions: list[tuple[Iri, Iri]] = field(default_factory=list)  # (property, filler)
    asserted_axioms: list[str] = field(default_factory=list)
    used_by: list[tuple[Iri, str]] = field(default_factory=list)
    xrefs: list[str] = field(default_factory=list)

    def to_dict(self, labeler) -> dict:
        def ref(i: Iri) -> dict:
            return {"iri": i.value, "label": labeler(i)}

        axiom_terms = [
            {"kind": "named", "target": ref(parent)} for parent in self.named_superclasses
        ] + [
            {"kind": "some", "property": ref(prop), "filler": ref(filler)}
            for prop, filler in self.restrictions
        ]
        return {
            "iri": self.iri.value,
            "label": self.label,
            "hierarchy_paths": [
                [ref(i) for i in chain] for chain in self.hierarchy_paths
            ],
            "asserted_axioms": list(self.asserted_axioms),
            "axiom_terms": axiom_terms,
            "used_by": [
                {"subject": s.value, "label": labeler(s), "axiom": text}
                for s, text in self.used_by
            ],
            "xrefs": list(self.xrefs),
        }


def label_of(g: Graph, iri: Iri) -> str:
    for t in g.match(s=iri, p=RDFS_LABEL):
        if isinstance(t.object, Literal):
            return t.object.lexical
    return iri.local_name


def _named_superclasses(g: Graph, iri: Iri) -> list[Iri]:
    return [
        t.object
        for t in g.match(s=iri, p=RDFS_SUBCLASSOF)
        if isinstance(t.object, Iri)
    ]


def _restrictions_of(g: Graph, subject: Subject) -> list[tuple[BlankNode, Iri, Iri]]:
    """(node, property, filler) for each restriction superclass of subject."""
    out = []
    for t in g.match(s=subject, p=RDFS_SUBCLASSOF):
        node = t.object
        if not isinstance(node, BlankNode):
            continue
        if not g.match(s=node, p=RDF_TYPE, o=OWL_RESTRICTION):
            continue
        prop = g.value(node, OWL_ON_PROPERTY)
        filler = g.value(node, OWL_SOME_VALUES_FROM)
        if isinstance(prop, Iri) and isinstance(filler, Iri):
            out.append((node, prop, filler))
    return out


def hierarchy_paths(g: Graph, iri: Iri, cap: int = 200) -> list[list[Iri]]:
    """Every root-to-term chain over named subClassOf edges, sorted.

    ``cap`` bounds the enumeration on pathological inputs; converted
    ontologies stay far below it.
    """
    paths: list[list[Iri]] = []

    def walk(node: Iri, suffix: list[Iri], seen: frozenset[Iri]) -> None:
        if len(paths) >= cap:
            return
        parents = [p for p in _named_superclasses(g, node) if p not in seen]
        if not parents:
            paths.append([node, *suffix])
            return
        for parent in sorted(parents, key=lambda i: i.value):
            walk(parent, [node, *suffix], seen | {parent})

    walk(iri, [], frozenset([iri]))
    return sorted(paths, key=lambda chain: [i.value for i in chain])


def render_axiom(g: Graph, prop: Iri, filler: Iri) -> str:
    return f"{label_of(g, prop)} some {label_of(g, filler)}"


def build_term_page(g: Graph, term: Iri) -> TermPage:
    """Assemble the page for a declared class; raises TermNotFoundError."""
    if not g.match(s=term, p=RDF_TYPE, o=OWL_CLASS):
        raise TermNotFoundError(term.value)
    named = sorted(_named_superclasses(g, term), key=lambda i: i.value)
    axioms = [label_of(g, parent) for parent in named]
    restriction_pairs = sorted(
        ((prop, filler) for _, prop, filler in _restrictions_of(g, term)),
        key=lambda pair: render_axiom(g, *pair),
    )
    restrictions = [render_axiom(g, prop, filler) for prop, filler in restriction_pairs]
    used_by: list[tuple[Iri, str]] = []
    for t in g.match(p=OWL_SOME_VALUES_FROM, o=term):
        node = t.subject
        if not isinstance(node, BlankNode):
            continue
        prop = g.value(node, OWL_ON_PROPERTY)
        if not isinstance(prop, Iri):
            continue
        for owner_triple in g.match(p=RDFS_SUBCLASSOF, o=node):
            owner = owner_triple.subject
            if isinstance(owner, Iri):
                text = f"{label_of(g, owner)} subClassOf: {render_axiom(g, prop, term)}"
                used_by.append((owner, text))
    used_by.sort(key=lambda pair: (pair[0].value, pair[1]))
    xrefs = [
        t.object.lexical
        for t in g.match(s=term, p=DB_XREF)
        if isinstance(t.object, Literal)
    ]
    return TermPage(
        iri=term,
        label=label_of(g, term),
        hierarchy_paths=hierarchy_paths(g, term),
        named_superclasses=named,
        restrictions=restriction_pairs,
        asserted_axioms=axioms + restrictions,
        used_by=used_by,
        xrefs=sorted(xrefs),
    )


def term_neighborhood(g: Graph, term: Iri) -> Graph:
    """Triples shown on a term page: the term's own statements (with its
    restriction nodes expanded), every statement referencing it (including
    restrictions on other classes that use it as a filler), and the labels
    of every term mentioned, so the page is readable standalone."""
    if not g.match(s=term, p=RDF_TYPE, o=OWL_CLASS):
        raise TermNotFoundError(term.value)
    out = Graph()
    for t in g.match(s=term):
        out.add(t)
        if isinstance(t.object, BlankNode):
            out.update(g.match(s=t.object))
    for t in g.match(o=term):
        out.add(t)
        if isinstance(t.subject, BlankNode):
            out.update(g.match(s=t.subject))
            for owner in g.match(p=RDFS_SUBCLASSOF, o=t.subject):
                out.add(owner)
    for mentioned in sorted(
        {x for t in out for x in (t.subject, t.object) if isinstance(x, Iri)},
        key=lambda i: i.value,
    ):
        out.update(g.match(s=mentioned, p=RDFS_LABEL))
    return out
