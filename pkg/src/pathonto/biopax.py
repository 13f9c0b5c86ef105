"""Typed view over a parsed BioPAX Level-3 graph.

``extract_document`` lifts the raw triples into records with resolved
cross-references. Recognized types land in one of six registries; support
types (xrefs, entity references, stoichiometry, sequence sites) are
consumed into the owning records; everything else is counted in a
skipped-type report instead of being dropped silently.
"""

from __future__ import annotations

import enum
import re
from collections import Counter
from dataclasses import dataclass, field

from pathonto.errors import DanglingReferenceError
from pathonto.rdf.model import Graph, Iri, Literal, Subject, Term
from pathonto.rdf.vocab import BIOPAX_NS, RDF_TYPE

DIGITS_RE = re.compile(r"\d+\Z")
GO_ACCESSION_RE = re.compile(r"(?:GO:)?(\d{7})\Z")


def bp(local: str) -> Iri:
    return Iri(BIOPAX_NS + local)


class EntityKind(enum.Enum):
    PATHWAY = "Pathway"
    BIOCHEMICAL_REACTION = "BiochemicalReaction"
    OTHER_INTERACTION = "OtherInteraction"
    PROTEIN = "Protein"
    COMPLEX = "Complex"
    SMALL_MOLECULE = "SmallMolecule"
    DNA = "Dna"
    RNA = "Rna"
    PHYSICAL_ENTITY_OTHER = "PhysicalEntityOther"


class XrefKind(enum.Enum):
    UNIFICATION = "Unification"
    PUBLICATION = "Publication"
    RELATIONSHIP = "Relationship"


# rdf:type local name -> entity kind, for everything that becomes a record.
INTERACTION_TYPES = {
    "BiochemicalReaction": EntityKind.BIOCHEMICAL_REACTION,
    "Interaction": EntityKind.OTHER_INTERACTION,
    "Control": EntityKind.OTHER_INTERACTION,
    "Catalysis": EntityKind.OTHER_INTERACTION,
    "Modulation": EntityKind.OTHER_INTERACTION,
    "TemplateReaction": EntityKind.OTHER_INTERACTION,
    "TemplateReactionRegulation": EntityKind.OTHER_INTERACTION,
    "ComplexAssembly": EntityKind.OTHER_INTERACTION,
    "Transport": EntityKind.OTHER_INTERACTION,
    "TransportWithBiochemicalReaction": EntityKind.OTHER_INTERACTION,
    "Degradation": EntityKind.OTHER_INTERACTION,
    "MolecularInteraction": EntityKind.OTHER_INTERACTION,
    "GeneticInteraction": EntityKind.OTHER_INTERACTION,
    "Conversion": EntityKind.OTHER_INTERACTION,
}

PHYSICAL_ENTITY_TYPES = {
    "Protein": EntityKind.PROTEIN,
    "Complex": EntityKind.COMPLEX,
    "SmallMolecule": EntityKind.SMALL_MOLECULE,
    "Dna": EntityKind.DNA,
    "Rna": EntityKind.RNA,
    "DnaRegion": EntityKind.PHYSICAL_ENTITY_OTHER,
    "RnaRegion": EntityKind.PHYSICAL_ENTITY_OTHER,
    "PhysicalEntity": EntityKind.PHYSICAL_ENTITY_OTHER,
}

STEP_TYPES = {"PathwayStep", "BiochemicalPathwayStep"}

XREF_TYPES = {
    "UnificationXref": XrefKind.UNIFICATION,
    "PublicationXref": XrefKind.PUBLICATION,
    "RelationshipXref": XrefKind.RELATIONSHIP,
}

ENTITY_REFERENCE_TYPES = {
    "EntityReference",
    "ProteinReference",
    "SmallMoleculeReference",
    "DnaReference",
    "DnaRegionReference",
    "RnaReference",
    "RnaRegionReference",
}

# Support types that are consumed into owning records (or deliberately
# carried as annotations only) rather than becoming records themselves.
SUPPORT_TYPES = (
    set(XREF_TYPES)
    | ENTITY_REFERENCE_TYPES
    | {"Stoichiometry", "SequenceSite", "SequenceInterval", "SequenceLocation"}
)


@dataclass(frozen=True)
class XrefRec:
    database: str
    accession: str
    kind: XrefKind


@dataclass
class BioSourceRec:
    id: Iri
    name: str
    taxon_xref: str | None = None

    def __post_init__(self) -> None:
        if self.taxon_xref is not None and not DIGITS_RE.match(self.taxon_xref):
            raise ValueError(f"taxon_xref must be all digits: {self.taxon_xref!r}")


@dataclass
class LocationRec:
    id: Iri
    term: str
    go_xref: str | None = None

    def __post_init__(self) -> None:
        if self.go_xref is not None and not re.fullmatch(r"\d{7}", self.go_xref):
            raise ValueError(f"go_xref must be exactly 7 digits: {self.go_xref!r}")


@dataclass
class BioPaxEntity:
    id: Iri
    kind: EntityKind
    display_name: str | None = None
    organism: Iri | None = None
    cellular_location: Iri | None = None
    xrefs: list[XrefRec] = field(default_factory=list)
    components: list[Iri] = field(default_factory=list)
    # componentStoichiometry coefficients, keyed by component IRI text;
    # carried as annotation text only, never interpreted numerically.
    coefficients: dict[str, str] = field(default_factory=dict)


@dataclass
class PathwayRec:
    id: Iri
    display_name: str
    organism: Iri | None = None
    step_order: list[Iri] = field(default_factory=list)
    components: list[Iri] = field(default_factory=list)
    xrefs: list[XrefRec] = field(default_factory=list)
    name_missing: bool = False

    def __post_init__(self) -> None:
        if len(set(i.value for i in self.step_order)) != len(self.step_order):
            raise ValueError(f"duplicate pathway steps on {self.id}")


@dataclass
class PathwayStepRec:
    id: Iri
    step_processes: list[Iri] = field(default_factory=list)
    next_steps: list[Iri] = field(default_factory=list)

    def __post_init__(self) -> None:
        if any(n == self.id for n in self.next_steps):
            raise ValueError(f"pathway step {self.id} lists itself as a next step")


@dataclass
class BioPaxDocument:
    source_id: str = "doc"
    pathways: dict[Iri, PathwayRec] = field(default_factory=dict)
    interactions: dict[Iri, BioPaxEntity] = field(default_factory=dict)
    physical_entities: dict[Iri, BioPaxEntity] = field(default_factory=dict)
    steps: dict[Iri, PathwayStepRec] = field(default_factory=dict)
    biosources: dict[Iri, BioSourceRec] = field(default_factory=dict)
    locations: dict[Iri, LocationRec] = field(default_factory=dict)
    skipped: Counter = field(default_factory=Counter)
    consumed: Counter = field(default_factory=Counter)
    dropped_refs: Counter = field(default_factory=Counter)
    warnings: list[str] = field(default_factory=list)

    def registries(self) -> tuple[dict, ...]:
        return (
            self.pathways,
            self.interactions,
            self.physical_entities,
            self.steps,
            self.biosources,
            self.locations,
        )

    def record_count(self) -> int:
        return sum(len(r) for r in self.registries())

    def is_empty(self) -> bool:
        return self.record_count() == 0

    def skipped_report_rows(self) -> list[tuple[str, int]]:
        """Two-column rows (type IRI, count) for everything not registered."""
        merged = self.skipped + self.consumed
        return sorted((iri, n) for iri, n in merged.items())


def taxon_of(rec: BioSourceRec) -> int | None:
    """NCBI taxon number, when the source carries a taxonomy xref."""
    if rec.taxon_xref is None:
        return None
    return int(rec.taxon_xref)


def _lexical(term: Term | None) -> str | None:
    if isinstance(term, Literal):
        return term.lexical
    return None


class _Extractor:
    def __init__(self, g: Graph, source_id: str):
        self.g = g
        self.doc = BioPaxDocument(source_id=source_id)
        # subject -> BioPAX type local name (first in canonical order when
        # an exporter emits several, which the profile does not).
        self.typed: dict[Subject, str] = {}

    def run(self) -> BioPaxDocument:
        for triple in self.g.match(p=RDF_TYPE):
            obj = triple.object
            if isinstance(obj, Iri) and obj.value.startswith(BIOPAX_NS):
                self.typed.setdefault(triple.subject, obj.value[len(BIOPAX_NS):])
        for subject in sorted(self.typed, key=lambda s: str(s)):
            self._dispatch(subject, self.typed[subject])
        self._check_closure()
        return self.doc

    def _dispatch(self, s: Subject, type_local: str) -> None:
        if not isinstance(s, Iri):
            # Anonymous BioPAX resources cannot be minted stably; the
            # Reactome exporter always names its resources.
            self.doc.skipped[BIOPAX_NS + type_local] += 1
            return
        if type_local == "Pathway":
            self.doc.pathways[s] = self._pathway(s)
        elif type_local in INTERACTION_TYPES:
            self.doc.interactions[s] = self._entity(s, INTERACTION_TYPES[type_local])
        elif type_local in PHYSICAL_ENTITY_TYPES:
            self.doc.physical_entities[s] = self._entity(s, PHYSICAL_ENTITY_TYPES[type_local])
        elif type_local in STEP_TYPES:
            self.doc.steps[s] = self._step(s)
        elif type_local == "BioSource":
            self.doc.biosources[s] = self._biosource(s)
        elif type_local == "CellularLocationVocabulary":
            self.doc.locations[s] = self._location(s)
        elif type_local in SUPPORT_TYPES:
            self.doc.consumed[BIOPAX_NS + type_local] += 1
        else:
            self.doc.skipped[BIOPAX_NS + type_local] += 1

    # -- field helpers ----------------------------------------------------

    def _display_name(self, s: Iri) -> str | None:
        for prop in ("displayName", "standardName", "name"):
            value = _lexical(self.g.value(s, bp(prop)))
            if value:
                return value
        return None

    def _refs(self, s: Iri, prop: str, allowed: set[str]) -> list[Iri]:
        """Targets of a reference property, validated against the type map.

        Targets whose type is outside ``allowed`` are dropped and counted;
        undeclared targets raise DanglingReferenceError.
        """
        out: list[Iri] = []
        for obj in self.g.objects(s, bp(prop)):
            if isinstance(obj, Literal):
                continue
            if obj not in self.typed:
                raise DanglingReferenceError(str(s), BIOPAX_NS + prop, str(obj))
            if self.typed[obj] not in allowed:
                self.doc.dropped_refs[BIOPAX_NS + prop] += 1
                continue
            if isinstance(obj, Iri):
                out.append(obj)
        return out

    def _xrefs_of(self, s: Iri) -> list[XrefRec]:
        out = []
        for target in self._refs(s, "xref", set(XREF_TYPES)):
            kind = XREF_TYPES[self.typed[target]]
            db = _lexical(self.g.value(target, bp("db"))) or ""
            acc = _lexical(self.g.value(target, bp("id"))) or ""
            out.append(XrefRec(database=db, accession=acc, kind=kind))
        return out

    # -- record builders ----------------------------------------------------

    PROCESS_TYPES = {"Pathway"} | set(INTERACTION_TYPES)

    def _pathway(self, s: Iri) -> PathwayRec:
        name = self._display_name(s)
        missing = name is None
        if missing:
            name = s.local_name
            self.doc.warnings.append(f"pathway {s} has no display name; using {name!r}")
        organisms = self._refs(s, "organism", {"BioSource"})
        steps = self._refs(s, "pathwayOrder", STEP_TYPES)
        components = self._refs(s, "pathwayComponent", self.PROCESS_TYPES)
        return PathwayRec(
            id=s,
            display_name=name,
            organism=organisms[0] if organisms else None,
            step_order=steps,
            components=components,
            xrefs=self._xrefs_of(s),
            name_missing=missing,
        )

    def _step(self, s: Iri) -> PathwayStepRec:
        processes = self._refs(s, "stepProcess", self.PROCESS_TYPES)
        processes += self._refs(s, "stepConversion", self.PROCESS_TYPES)
        return PathwayStepRec(
            id=s,
            step_processes=processes,
            next_steps=self._refs(s, "nextStep", STEP_TYPES),
        )

    def _entity(self, s: Iri, kind: EntityKind) -> BioPaxEntity:
        locations = self._refs(s, "cellularLocation", {"CellularLocationVocabulary"})
        xrefs = self._xrefs_of(s)
        organism = self._refs(s, "organism", {"BioSource"})
        # EntityReference indirection is flattened into the owning entity.
        for ref in self._refs(s, "entityReference", ENTITY_REFERENCE_TYPES):
            xrefs.extend(self._xrefs_of(ref))
            organism = organism or self._refs(ref, "organism", {"BioSource"})
        components = self._refs(s, "component", set(PHYSICAL_ENTITY_TYPES))
        coefficients: dict[str, str] = {}
        for stoich in self._refs(s, "componentStoichiometry", {"Stoichiometry"}):
            members = self._refs(stoich, "physicalEntity", set(PHYSICAL_ENTITY_TYPES))
            coeff = _lexical(self.g.value(stoich, bp("stoichiometricCoefficient")))
            for member in members:
                if member not in components:
                    components.append(member)
                if coeff:
                    coefficients[member.value] = coeff
        return BioPaxEntity(
            id=s,
            kind=kind,
            display_name=self._display_name(s),
            organism=organism[0] if organism else None,
            cellular_location=locations[0] if locations else None,
            xrefs=xrefs,
            components=components,
            coefficients=coefficients,
        )

    def _biosource(self, s: Iri) -> BioSourceRec:
        name = self._display_name(s) or s.local_name
        taxon = None
        for xref in self._xrefs_of(s):
            if xref.kind is not XrefKind.UNIFICATION:
                continue
            if "taxon" in xref.database.lower() and DIGITS_RE.match(xref.accession):
                taxon = xref.accession
                break
        return BioSourceRec(id=s, name=name, taxon_xref=taxon)

    def _location(self, s: Iri) -> LocationRec:
        term = _lexical(self.g.value(s, bp("term"))) or s.local_name
        go = None
        for xref in self._xrefs_of(s):
            if xref.kind is not XrefKind.UNIFICATION:
                continue
            m = GO_ACCESSION_RE.match(xref.accession.strip())
            if m and xref.database.lower() in ("go", "gene ontology"):
                go = m.group(1)
                break
        if go is None:
            # The exporter sometimes puts the accession in the term text.
            m = GO_ACCESSION_RE.match(term.strip())
            if m and term.strip().startswith("GO:"):
                go = m.group(1)
        return LocationRec(id=s, term=term, go_xref=go)

    # -- validation ----------------------------------------------------------

    def _check_closure(self) -> None:
        doc = self.doc
        keys: set[Iri] = set()
        for registry in doc.registries():
            keys.update(registry)
        def check(owner: Iri, ref: Iri | None, prop: str) -> None:
            if ref is not None and ref not in keys:
                raise DanglingReferenceError(str(owner), prop, str(ref))
        for p in doc.pathways.values():
            check(p.id, p.organism, "organism")
            for r in p.step_order:
                check(p.id, r, "pathwayOrder")
            for r in p.components:
                check(p.id, r, "pathwayComponent")
        for step in doc.steps.values():
            for r in step.step_processes:
                check(step.id, r, "stepProcess")
            for r in step.next_steps:
                check(step.id, r, "nextStep")
        for e in list(doc.interactions.values()) + list(doc.physical_entities.values()):
            check(e.id, e.organism, "organism")
            check(e.id, e.cellular_location, "cellularLocation")
            for r in e.components:
                check(e.id, r, "component")


def extract_document(g: Graph, source_id: str = "doc") -> BioPaxDocument:
    """Lift a BioPAX graph into a reference-closed document.

    Pure function of the graph: two calls return equal documents.
    """
    return _Extractor(g, source_id).run()
