"""RDF substrate: terms, indexed graph, and the two supported syntaxes."""

from pathonto.rdf.model import (
    BlankNode,
    Graph,
    Iri,
    Literal,
    Subject,
    Term,
    Triple,
    term_sort_key,
)
from pathonto.rdf.rdfxml import parse_rdf_xml
from pathonto.rdf.turtle import parse_turtle, serialize_turtle

__all__ = [
    "BlankNode",
    "Graph",
    "Iri",
    "Literal",
    "Subject",
    "Term",
    "Triple",
    "term_sort_key",
    "parse_rdf_xml",
    "parse_turtle",
    "serialize_turtle",
]
