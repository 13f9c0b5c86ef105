"""Declaration counts over a sealed ontology graph."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from pathonto.rdf.model import Graph, Iri
from pathonto.rdf.vocab import (
    OWL_ANNOTATION_PROPERTY,
    OWL_CLASS,
    OWL_DATATYPE_PROPERTY,
    OWL_OBJECT_PROPERTY,
    RDF_TYPE,
)


@dataclass(frozen=True)
class OntologyStats:
    class_count: int
    object_property_count: int
    datatype_property_count: int
    annotation_property_count: int

    def to_dict(self) -> dict[str, int]:
        return asdict(self)


def _declared(g: Graph, declaration: Iri) -> int:
    return len({
        t.subject for t in g.iter_matches(p=RDF_TYPE, o=declaration)
        if isinstance(t.subject, Iri)
    })


def compute_stats(g: Graph) -> OntologyStats:
    """Distinct IRIs per declaration type; blank nodes never count."""
    return OntologyStats(
        class_count=_declared(g, OWL_CLASS),
        object_property_count=_declared(g, OWL_OBJECT_PROPERTY),
        datatype_property_count=_declared(g, OWL_DATATYPE_PROPERTY),
        annotation_property_count=_declared(g, OWL_ANNOTATION_PROPERTY),
    )
