"""Instance-to-class conversion under the BFO/INO backbone.

Every pathway, interaction, step, and physical entity in a BioPAX document
becomes a declared OWL class with a minted 7-digit identifier. Composition,
ordering, and location are expressed as existential restrictions
(``property some Filler``); species, cellular locations, and small
molecules are rewritten onto NCBITaxon / GO / ChEBI identifiers, which are
collected into an import request set; publication metadata collapses to
bare PMIDs.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from pathonto.biopax import (
    BioPaxDocument,
    BioPaxEntity,
    BioSourceRec,
    EntityKind,
    LocationRec,
    PathwayRec,
    XrefKind,
    XrefRec,
    taxon_of,
)
from pathonto.errors import (
    CounterOverflowError,
    NonNumericPmidError,
    RegistryConflictError,
)
from pathonto.rdf.model import BlankNode, Graph, Iri, Literal, Triple
from pathonto.rdf.vocab import (
    DB_XREF,
    OBO_NS,
    OWL_ANNOTATION_PROPERTY,
    OWL_CLASS,
    OWL_OBJECT_PROPERTY,
    OWL_ON_PROPERTY,
    OWL_RESTRICTION,
    OWL_SOME_VALUES_FROM,
    RDF_TYPE,
    RDFS_LABEL,
    RDFS_SUBCLASSOF,
    obo,
)

HUMAN_TAXON = 9606

MINTED_PREFIX = OBO_NS + "HINO_"
MINTED_RE = re.compile(re.escape(MINTED_PREFIX) + r"\d{7}\Z")
MAX_COUNTER = 9_999_999

# Object property for step ordering lives in the artifact namespace: the
# source vocabulary treats it as plain structure, not an OBO relation.
ARTIFACT_NS = "http://www.ino-ontology.org/hino/"


class KnownIri:
    """Fixed registry of backbone identifiers and relation IRIs."""

    bfo_entity = obo("BFO_0000001")
    bfo_continuant = obo("BFO_0000002")
    bfo_occurrent = obo("BFO_0000003")
    bfo_process = obo("BFO_0000015")
    bfo_material_entity = obo("BFO_0000040")

    ino_interaction = obo("INO_0000002")
    ino_interaction_network = obo("INO_0000004")
    ino_pathway = obo("INO_0000006")
    ino_human_molecular_pathway = obo("INO_0000021")

    rel_has_part = obo("BFO_0000051")
    rel_located_in = obo("RO_0001025")
    rel_occurs_in = obo("BFO_0000066")
    rel_precedes = obo("BFO_0000063")
    rel_pathway_order = Iri(ARTIFACT_NS + "pathwayOrder")

    citation = obo("IAO_0000119")
    db_xref = DB_XREF

    # Anchor classes for physical-entity kinds without a dedicated branch.
    anchor_protein = obo("PR_000000001")
    anchor_complex = obo("GO_0032991")
    anchor_dna = obo("CHEBI_16991")
    anchor_rna = obo("CHEBI_33697")
    anchor_small_molecule = obo("CHEBI_24431")

    ncbitaxon_prefix = OBO_NS + "NCBITaxon_"
    go_prefix = OBO_NS + "GO_"
    chebi_prefix = OBO_NS + "CHEBI_"
    pr_prefix = OBO_NS + "PR_"


# Label and parent for every backbone class the converter declares itself.
BACKBONE: list[tuple[Iri, str, Iri | None]] = [
    (KnownIri.bfo_entity, "entity", None),
    (KnownIri.bfo_continuant, "continuant", KnownIri.bfo_entity),
    (KnownIri.bfo_occurrent, "occurrent", KnownIri.bfo_entity),
    (KnownIri.bfo_process, "processual_entity", KnownIri.bfo_occurrent),
    (KnownIri.bfo_material_entity, "material_entity", KnownIri.bfo_continuant),
    (KnownIri.ino_interaction, "interaction", KnownIri.bfo_process),
    (KnownIri.ino_interaction_network, "interaction_network", KnownIri.bfo_process),
    (KnownIri.ino_pathway, "pathway", KnownIri.ino_interaction_network),
    (KnownIri.ino_human_molecular_pathway, "human_molecular_pathway", KnownIri.ino_pathway),
]

OBJECT_PROPERTIES: list[tuple[Iri, str]] = [
    (KnownIri.rel_has_part, "has_part"),
    (KnownIri.rel_located_in, "located_in"),
    (KnownIri.rel_pathway_order, "pathwayOrder"),
    (KnownIri.rel_precedes, "precedes"),
]

ANNOTATION_PROPERTIES: list[tuple[Iri, str]] = [
    (KnownIri.citation, "citation"),
    (KnownIri.db_xref, "database_cross_reference"),
]


# ---------------------------------------------------------------------------
# Identifier minting
# ---------------------------------------------------------------------------

class IdRegistry:
    """Ledger from source instance keys to stable minted class IRIs.

    Injective by construction; a persisted registry never reassigns a key.
    """

    def __init__(self) -> None:
        self.entries: dict[str, Iri] = {}
        self._minted: set[Iri] = set()
        self.next_counter = 1

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, key: str) -> bool:
        return key in self.entries

    def mint(self, source_key: str) -> Iri:
        existing = self.entries.get(source_key)
        if existing is not None:
            return existing
        if self.next_counter > MAX_COUNTER:
            raise CounterOverflowError(
                f"identifier space exhausted at {self.next_counter}"
            )
        iri = Iri(f"{MINTED_PREFIX}{self.next_counter:07d}")
        self.next_counter += 1
        self.entries[source_key] = iri
        self._minted.add(iri)
        return iri

    def mint_batch(self, source_keys: set[str]) -> None:
        """Assign fresh ids in lexicographic key order (input-order independent)."""
        for key in sorted(source_keys):
            self.mint(key)

    def counter_of(self, iri: Iri) -> int:
        return int(iri.value[len(MINTED_PREFIX):])

    def merge(self, other: "IdRegistry") -> None:
        """Serially fold another registry into this one.

        Intended for joining registries after documents were converted in
        parallel with separate ones. Any disagreement (same key with a
        different id, or one id under two keys) is an error, never a
        silent remap.
        """
        for key, iri in sorted(other.entries.items()):
            known = self.entries.get(key)
            if known == iri:
                continue
            if known is not None:
                raise RegistryConflictError(
                    f"key {key!r} maps to both {known.value} and {iri.value}"
                )
            if iri in self._minted:
                raise RegistryConflictError(
                    f"id {iri.value} is already assigned to a different key"
                )
            self.entries[key] = iri
            self._minted.add(iri)
            self.next_counter = max(self.next_counter, self.counter_of(iri) + 1)

    # -- persistence (sorted two-column TSV, reviewable in diffs) ----------

    def dump(self, path: str | Path) -> None:
        lines = [f"{k}\t{v.value}" for k, v in sorted(self.entries.items())]
        Path(path).write_text("\n".join(lines) + ("\n" if lines else ""), encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "IdRegistry":
        reg = cls()
        text = Path(path).read_text(encoding="utf-8")
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                key, iri_text = line.split("\t")
            except ValueError:
                raise RegistryConflictError(f"{path}:{lineno}: expected two tab-separated columns")
            if not MINTED_RE.match(iri_text):
                raise RegistryConflictError(f"{path}:{lineno}: malformed minted IRI {iri_text!r}")
            iri = Iri(iri_text)
            if key in reg.entries:
                raise RegistryConflictError(f"{path}:{lineno}: duplicate key {key!r}")
            if iri in reg._minted:
                raise RegistryConflictError(f"{path}:{lineno}: IRI {iri_text!r} assigned twice")
            reg.entries[key] = iri
            reg._minted.add(iri)
            reg.next_counter = max(reg.next_counter, reg.counter_of(iri) + 1)
        return reg


# ---------------------------------------------------------------------------
# Axioms and the ontology document
# ---------------------------------------------------------------------------

class AxiomKind(Enum):
    SUBCLASS_OF_NAMED = "SubClassOfNamed"
    SUBCLASS_OF_SOME_VALUES_FROM = "SubClassOfSomeValuesFrom"


@dataclass(frozen=True)
class ClassAxiom:
    subject: Iri
    kind: AxiomKind
    property: Iri | None
    target: Iri  # superclass for named axioms, restriction filler otherwise

    def __post_init__(self) -> None:
        if self.kind is AxiomKind.SUBCLASS_OF_NAMED and self.property is not None:
            raise ValueError("named subclass axiom cannot carry a property")
        if self.kind is AxiomKind.SUBCLASS_OF_SOME_VALUES_FROM and self.property is None:
            raise ValueError("existential restriction requires a property")

    def sort_key(self) -> tuple:
        return (
            self.subject.value,
            self.kind.value,
            self.property.value if self.property else "",
            self.target.value,
        )


@dataclass
class OntologyDocument:
    """Classes-only output: declarations, axioms, annotations."""

    classes: dict[Iri, str] = field(default_factory=dict)  # class -> label
    axioms: list[ClassAxiom] = field(default_factory=list)
    annotations: dict[Iri, list[tuple[Iri, Literal]]] = field(default_factory=dict)
    object_properties: dict[Iri, str] = field(default_factory=dict)
    annotation_properties: dict[Iri, str] = field(default_factory=dict)

    def declare(self, iri: Iri, label: str) -> None:
        known = self.classes.get(iri)
        if known is not None and known != label:
            raise RegistryConflictError(
                f"class {iri} declared twice with different labels: {known!r} / {label!r}"
            )
        self.classes[iri] = label

    def annotate(self, subject: Iri, prop: Iri, value: Literal) -> None:
        self.annotations.setdefault(subject, []).append((prop, value))

    def axioms_about(self, subject: Iri) -> list[ClassAxiom]:
        return sorted((a for a in self.axioms if a.subject == subject), key=ClassAxiom.sort_key)

    def to_graph(self) -> Graph:
        """Deterministic triple form.

        Restriction nodes get content-derived labels so two documents can
        be union-merged without label collisions: equal axioms collapse,
        distinct axioms never share a node.
        """
        g = Graph()
        for cls, label in sorted(self.classes.items(), key=lambda kv: kv[0].value):
            g.add(Triple(cls, RDF_TYPE, OWL_CLASS))
            g.add(Triple(cls, RDFS_LABEL, Literal(label)))
        for prop, label in sorted(self.object_properties.items(), key=lambda kv: kv[0].value):
            g.add(Triple(prop, RDF_TYPE, OWL_OBJECT_PROPERTY))
            g.add(Triple(prop, RDFS_LABEL, Literal(label)))
        for prop, label in sorted(self.annotation_properties.items(), key=lambda kv: kv[0].value):
            g.add(Triple(prop, RDF_TYPE, OWL_ANNOTATION_PROPERTY))
            g.add(Triple(prop, RDFS_LABEL, Literal(label)))
        for axiom in sorted(set(self.axioms), key=ClassAxiom.sort_key):
            if axiom.kind is AxiomKind.SUBCLASS_OF_NAMED:
                g.add(Triple(axiom.subject, RDFS_SUBCLASSOF, axiom.target))
            else:
                digest = hashlib.sha1(
                    f"{axiom.subject.value}|{axiom.property.value}|{axiom.target.value}".encode()
                ).hexdigest()[:12]
                node = BlankNode(f"r{digest}")
                g.add(Triple(axiom.subject, RDFS_SUBCLASSOF, node))
                g.add(Triple(node, RDF_TYPE, OWL_RESTRICTION))
                g.add(Triple(node, OWL_ON_PROPERTY, axiom.property))
                g.add(Triple(node, OWL_SOME_VALUES_FROM, axiom.target))
        for subject in sorted(self.annotations, key=lambda i: i.value):
            for prop, value in sorted(
                self.annotations[subject], key=lambda pv: (pv[0].value, pv[1].lexical)
            ):
                g.add(Triple(subject, prop, value))
        return g


class ImportRequestSet:
    """External IRIs (GO, ChEBI, NCBITaxon, PRO) needed to close the output."""

    def __init__(self, iris: set[Iri] | None = None):
        self.iris: set[Iri] = set(iris or ())

    def add(self, iri: Iri) -> None:
        self.iris.add(iri)

    def __len__(self) -> int:
        return len(self.iris)

    def __contains__(self, iri: Iri) -> bool:
        return iri in self.iris

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ImportRequestSet) and self.iris == other.iris

    def dump(self, path: str | Path) -> None:
        Path(path).write_text(self.dumps(), encoding="utf-8")

    def dumps(self) -> str:
        lines = sorted(i.value for i in self.iris)
        return "\n".join(lines) + ("\n" if lines else "")

    @classmethod
    def load(cls, path: str | Path) -> "ImportRequestSet":
        out = cls()
        for line in Path(path).read_text(encoding="utf-8").splitlines():
            line = line.strip()
            if line and not line.startswith("#"):
                out.add(Iri(line))
        return out


@dataclass
class ConversionReport:
    source_id: str = ""
    classes_minted: int = 0
    named_subclass_axioms: int = 0
    restriction_axioms: dict[str, int] = field(default_factory=dict)
    external_terms_requested: int = 0
    citations_simplified: int = 0
    fallback_labels: list[str] = field(default_factory=list)
    unresolved_organisms: list[str] = field(default_factory=list)
    mixed_organism_pathways: list[str] = field(default_factory=list)
    missing_display_names: list[str] = field(default_factory=list)

    def to_json(self) -> str:
        payload = {
            "source_id": self.source_id,
            "classes_minted": self.classes_minted,
            "axioms": {
                "named_subclass": self.named_subclass_axioms,
                "restrictions": dict(sorted(self.restriction_axioms.items())),
            },
            "external_terms_requested": self.external_terms_requested,
            "citations_simplified": self.citations_simplified,
            "fallback_labels": sorted(self.fallback_labels),
            "unresolved_organisms": sorted(self.unresolved_organisms),
            "mixed_organism_pathways": sorted(self.mixed_organism_pathways),
            "missing_display_names": sorted(self.missing_display_names),
        }
        return json.dumps(payload, indent=2, sort_keys=True)


# ---------------------------------------------------------------------------
# Mapping rules
# ---------------------------------------------------------------------------

def _chebi_xref(e: BioPaxEntity) -> str | None:
    for xref in e.xrefs:
        if xref.kind is not XrefKind.UNIFICATION:
            continue
        if "chebi" in xref.database.lower():
            digits = xref.accession.rsplit(":", 1)[-1]
            if digits.isdigit():
                return digits
    return None


def route_superclass(rec: BioPaxEntity | PathwayRec, human: bool = False) -> Iri:
    """Backbone anchor for a converted record.

    Physical-entity kinds route under material entity (per-kind anchors);
    pathways route to the human branch when the organism is human;
    interactions route to the interaction anchor under process.
    """
    if isinstance(rec, PathwayRec):
        return KnownIri.ino_human_molecular_pathway if human else KnownIri.ino_pathway
    if rec.kind in (EntityKind.BIOCHEMICAL_REACTION, EntityKind.OTHER_INTERACTION):
        return KnownIri.ino_interaction
    if rec.kind is EntityKind.PROTEIN:
        return KnownIri.anchor_protein
    if rec.kind is EntityKind.COMPLEX:
        return KnownIri.anchor_complex
    if rec.kind is EntityKind.DNA:
        return KnownIri.anchor_dna
    if rec.kind is EntityKind.RNA:
        return KnownIri.anchor_rna
    if rec.kind is EntityKind.SMALL_MOLECULE:
        chebi = _chebi_xref(rec)
        if chebi is not None:
            return Iri(KnownIri.chebi_prefix + chebi)
        return KnownIri.anchor_small_molecule
    return KnownIri.bfo_material_entity


def simplify_citation(x: XrefRec) -> tuple[Iri, Literal]:
    """Collapse a publication xref to its bare PMID annotation.

    All other citation metadata (authors, title, journal) is discarded.
    """
    if x.kind is not XrefKind.PUBLICATION:
        raise ValueError(f"not a publication xref: {x}")
    if not x.accession.isdigit() or not x.accession:
        raise NonNumericPmidError(x.accession)
    return (KnownIri.citation, Literal(f"PMID:{x.accession}"))


class _Converter:
    def __init__(self, doc: BioPaxDocument, registry: IdRegistry, organism_as_occurs_in: bool):
        self.doc = doc
        self.registry = registry
        self.organism_relation = (
            KnownIri.rel_occurs_in if organism_as_occurs_in else KnownIri.rel_located_in
        )
        self.out = OntologyDocument()
        self.imports = ImportRequestSet()
        self.report = ConversionReport(source_id=doc.source_id)

    def key_of(self, iri: Iri) -> str:
        local = iri.value.rsplit("#", 1)[1] if "#" in iri.value else iri.value
        return f"{self.doc.source_id}#{local}"

    def minted(self, iri: Iri) -> Iri:
        return self.registry.mint(self.key_of(iri))

    def run(self) -> tuple[OntologyDocument, ImportRequestSet, ConversionReport]:
        doc = self.doc
        if doc.is_empty():
            return self.out, self.imports, self.report

        # First pass: all keys that need identifiers, minted in sorted
        # order so the result is independent of registry insertion order.
        keys: set[str] = set()
        for registry in (doc.pathways, doc.interactions, doc.physical_entities, doc.steps):
            keys.update(self.key_of(i) for i in registry)
        unresolved = False
        for pathway in doc.pathways.values():
            if pathway.organism is None:
                continue
            if taxon_of(doc.biosources[pathway.organism]) is None:
                keys.add(self.key_of(pathway.organism))
                unresolved = True
        if unresolved:
            keys.add(f"{doc.source_id}#organism-unresolved-holder")
        for entity in list(doc.physical_entities.values()) + list(doc.interactions.values()):
            loc = doc.locations.get(entity.cellular_location) if entity.cellular_location else None
            if loc is not None and loc.go_xref is None:
                keys.add(self.key_of(loc.id))
        before = len(self.registry)
        self.registry.mint_batch(keys)
        self.report.classes_minted = len(self.registry) - before

        self._backbone()
        for pathway in doc.pathways.values():
            self._convert_pathway(pathway)
        for step_iri in doc.steps:
            self._convert_step(step_iri)
        for entity in list(doc.interactions.values()) + list(doc.physical_entities.values()):
            self._convert_entity(entity)
        self.report.external_terms_requested = len(self.imports)
        return self.out, self.imports, self.report

    # -- pieces -------------------------------------------------------------

    def _backbone(self) -> None:
        for iri, label, parent in BACKBONE:
            self.out.declare(iri, label)
            if parent is not None:
                self._axiom(ClassAxiom(iri, AxiomKind.SUBCLASS_OF_NAMED, None, parent))
        self.out.object_properties.update({i: l for i, l in OBJECT_PROPERTIES})
        self.out.annotation_properties.update({i: l for i, l in ANNOTATION_PROPERTIES})

    def _axiom(self, axiom: ClassAxiom) -> None:
        self.out.axioms.append(axiom)
        if axiom.kind is AxiomKind.SUBCLASS_OF_NAMED:
            self.report.named_subclass_axioms += 1
        else:
            label = axiom.property.local_name
            self.report.restriction_axioms[label] = self.report.restriction_axioms.get(label, 0) + 1

    def _restriction(self, subject: Iri, prop: Iri, filler: Iri) -> None:
        self._axiom(ClassAxiom(subject, AxiomKind.SUBCLASS_OF_SOME_VALUES_FROM, prop, filler))

    def _declare_converted(self, source: Iri, label: str | None) -> Iri:
        cls = self.minted(source)
        if label is None:
            label = source.local_name
            self.report.fallback_labels.append(cls.value)
        self.out.declare(cls, label)
        self.out.annotate(cls, KnownIri.db_xref, Literal(source.value))
        return cls

    def _request(self, iri: Iri) -> Iri:
        self.imports.add(iri)
        return iri

    def map_species(self, source: BioSourceRec) -> Iri:
        taxon = taxon_of(source)
        if taxon is not None:
            return self._request(Iri(f"{KnownIri.ncbitaxon_prefix}{taxon}"))
        cls = self.registry.mint(self.key_of(source.id))
        if cls in self.out.classes:
            return cls
        holder = self.registry.mint(f"{self.doc.source_id}#organism-unresolved-holder")
        if holder not in self.out.classes:
            self.out.declare(holder, "organism (unresolved)")
            self._axiom(
                ClassAxiom(holder, AxiomKind.SUBCLASS_OF_NAMED, None, KnownIri.bfo_material_entity)
            )
        self._declare_converted(source.id, source.name)
        self._axiom(ClassAxiom(cls, AxiomKind.SUBCLASS_OF_NAMED, None, holder))
        self.report.unresolved_organisms.append(source.id.value)
        return cls

    def map_location(self, owner_class: Iri, loc: LocationRec) -> ClassAxiom:
        if loc.go_xref is not None:
            filler = self._request(Iri(KnownIri.go_prefix + loc.go_xref))
        else:
            filler = self.registry.mint(self.key_of(loc.id))
            if filler not in self.out.classes:
                self._declare_converted(loc.id, loc.term)
                self._axiom(
                    ClassAxiom(
                        filler, AxiomKind.SUBCLASS_OF_NAMED, None, KnownIri.bfo_material_entity
                    )
                )
        axiom = ClassAxiom(
            owner_class, AxiomKind.SUBCLASS_OF_SOME_VALUES_FROM, KnownIri.rel_located_in, filler
        )
        self._axiom(axiom)
        return axiom

    def _citations(self, cls: Iri, xrefs: list[XrefRec]) -> None:
        for xref in xrefs:
            if xref.kind is XrefKind.PUBLICATION and xref.database.lower() == "pubmed":
                prop, value = simplify_citation(xref)
                self.out.annotate(cls, prop, value)
                self.report.citations_simplified += 1
            elif xref.kind is not XrefKind.PUBLICATION and xref.database:
                self.out.annotate(
                    cls, KnownIri.db_xref, Literal(f"{xref.database}:{xref.accession}")
                )

    def _organism_taxon(self, ref: Iri | None) -> int | None:
        if ref is None:
            return None
        return taxon_of(self.doc.biosources[ref])

    def _convert_pathway(self, pathway: PathwayRec) -> None:
        human = self._organism_taxon(pathway.organism) == HUMAN_TAXON
        cls = self._declare_converted(pathway.id, pathway.display_name)
        if pathway.name_missing:
            self.report.missing_display_names.append(pathway.id.value)
        self._axiom(
            ClassAxiom(cls, AxiomKind.SUBCLASS_OF_NAMED, None, route_superclass(pathway, human))
        )
        for component in pathway.components:
            self._restriction(cls, KnownIri.rel_has_part, self.minted(component))
        for step in pathway.step_order:
            self._restriction(cls, KnownIri.rel_pathway_order, self.minted(step))
        if pathway.organism is not None:
            species = self.map_species(self.doc.biosources[pathway.organism])
            self._restriction(cls, self.organism_relation, species)
        self._citations(cls, pathway.xrefs)
        self._note_mixed_organisms(pathway)

    def _note_mixed_organisms(self, pathway: PathwayRec) -> None:
        own = self._organism_taxon(pathway.organism)
        if own is None:
            return
        for ref in pathway.components:
            rec = (
                self.doc.pathways.get(ref)
                or self.doc.interactions.get(ref)
                or self.doc.physical_entities.get(ref)
            )
            if rec is None or rec.organism is None:
                continue
            if self._organism_taxon(rec.organism) not in (None, own):
                self.report.mixed_organism_pathways.append(pathway.id.value)
                return

    def _convert_step(self, step_iri: Iri) -> None:
        step = self.doc.steps[step_iri]
        cls = self.minted(step_iri)
        self.out.declare(cls, f"PathwayStep{self.registry.counter_of(cls)}")
        self.out.annotate(cls, KnownIri.db_xref, Literal(step_iri.value))
        self._axiom(ClassAxiom(cls, AxiomKind.SUBCLASS_OF_NAMED, None, KnownIri.bfo_process))
        for process in step.step_processes:
            self._restriction(cls, KnownIri.rel_has_part, self.minted(process))
        for nxt in step.next_steps:
            self._restriction(cls, KnownIri.rel_precedes, self.minted(nxt))

    def _convert_entity(self, entity: BioPaxEntity) -> None:
        cls = self._declare_converted(entity.id, entity.display_name)
        superclass = route_superclass(entity)
        if superclass.value.startswith(OBO_NS) and not MINTED_RE.match(superclass.value):
            if superclass not in self.out.classes:
                self._request(superclass)
        self._axiom(ClassAxiom(cls, AxiomKind.SUBCLASS_OF_NAMED, None, superclass))
        for component in entity.components:
            self._restriction(cls, KnownIri.rel_has_part, self.minted(component))
        if entity.cellular_location is not None:
            self.map_location(cls, self.doc.locations[entity.cellular_location])
        self._citations(cls, entity.xrefs)


def convert(
    doc: BioPaxDocument,
    registry: IdRegistry,
    organism_as_occurs_in: bool = False,
) -> tuple[OntologyDocument, ImportRequestSet, ConversionReport]:
    """Convert a reference-closed document into a classes-only ontology.

    Deterministic in (document, registry snapshot); an empty document
    yields an empty ontology and an empty import set.

    ``organism_as_occurs_in`` switches the organism linkage from the
    published located_in shape to an occurs-in relation (default off).
    """
    return _Converter(doc, registry, organism_as_occurs_in).run()


# ---------------------------------------------------------------------------
# Lint
# ---------------------------------------------------------------------------

def lint_classes_only(g: Graph, allowed_external: ImportRequestSet | None = None) -> list[str]:
    """Violations of the output contract; empty list means clean.

    Checks that no individual is asserted into a minted class and that
    every named superclass / restriction filler is declared (or allowed
    as a pending external import).
    """
    violations: list[str] = []
    declared = {t.subject for t in g.match(p=RDF_TYPE, o=OWL_CLASS) if isinstance(t.subject, Iri)}
    allowed = allowed_external.iris if allowed_external else set()

    for triple in g.match(p=RDF_TYPE):
        obj = triple.object
        if isinstance(obj, Iri) and MINTED_RE.match(obj.value):
            violations.append(f"individual assertion into minted class: {triple.subject} a {obj}")

    def check_filler(context: str, term) -> None:
        if isinstance(term, Iri) and term not in declared and term not in allowed:
            violations.append(f"undeclared {context}: {term}")

    restriction_nodes = {t.subject for t in g.match(p=RDF_TYPE, o=OWL_RESTRICTION)}
    for triple in g.match(p=RDFS_SUBCLASSOF):
        if isinstance(triple.object, Iri):
            check_filler(f"superclass of {triple.subject}", triple.object)
    for node in restriction_nodes:
        for t in g.match(s=node, p=OWL_SOME_VALUES_FROM):
            check_filler(f"restriction filler under {node}", t.object)
    return violations
