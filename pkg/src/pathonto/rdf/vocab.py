"""Namespace constants for the vocabularies the pipeline touches."""

from __future__ import annotations

from pathonto.rdf.model import Iri

RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS_NS = "http://www.w3.org/2000/01/rdf-schema#"
OWL_NS = "http://www.w3.org/2002/07/owl#"
XSD_NS = "http://www.w3.org/2001/XMLSchema#"
OBO_NS = "http://purl.obolibrary.org/obo/"
OBO_IN_OWL_NS = "http://www.geneontology.org/formats/oboInOwl#"
BIOPAX_NS = "http://www.biopax.org/release/biopax-level3.owl#"

RDF_TYPE = Iri(RDF_NS + "type")

RDFS_LABEL = Iri(RDFS_NS + "label")
RDFS_SUBCLASSOF = Iri(RDFS_NS + "subClassOf")
RDFS_COMMENT = Iri(RDFS_NS + "comment")

OWL_CLASS = Iri(OWL_NS + "Class")
OWL_RESTRICTION = Iri(OWL_NS + "Restriction")
OWL_ON_PROPERTY = Iri(OWL_NS + "onProperty")
OWL_SOME_VALUES_FROM = Iri(OWL_NS + "someValuesFrom")
OWL_OBJECT_PROPERTY = Iri(OWL_NS + "ObjectProperty")
OWL_DATATYPE_PROPERTY = Iri(OWL_NS + "DatatypeProperty")
OWL_ANNOTATION_PROPERTY = Iri(OWL_NS + "AnnotationProperty")
OWL_ONTOLOGY = Iri(OWL_NS + "Ontology")

XSD_STRING = Iri(XSD_NS + "string")

DB_XREF = Iri(OBO_IN_OWL_NS + "hasDbXref")


def obo(local: str) -> Iri:
    """An identifier under the OBO PURL root, e.g. ``obo("GO_0005737")``."""
    return Iri(OBO_NS + local)


# Canonical prefix table used by the Turtle serializer's fixed header and
# as the SPARQL parser's built-in prologue.
WELL_KNOWN_PREFIXES: dict[str, str] = {
    "obo": OBO_NS,
    "oboInOwl": OBO_IN_OWL_NS,
    "owl": OWL_NS,
    "rdf": RDF_NS,
    "rdfs": RDFS_NS,
    "xsd": XSD_NS,
}
