import json

import pytest

from pathonto.biopax import (
    BioPaxDocument,
    BioPaxEntity,
    EntityKind,
    PathwayRec,
    XrefKind,
    XrefRec,
    extract_document,
)
from pathonto.errors import CounterOverflowError, NonNumericPmidError, RegistryConflictError
from pathonto.mapping import (
    AxiomKind,
    IdRegistry,
    ImportRequestSet,
    KnownIri,
    convert,
    lint_classes_only,
    route_superclass,
    simplify_citation,
)
from pathonto.rdf.model import Graph, Iri, Literal, Triple
from pathonto.rdf.rdfxml import parse_rdf_xml
from pathonto.rdf.vocab import RDF_TYPE, obo


def minted(n: int) -> Iri:
    return Iri(f"http://purl.obolibrary.org/obo/HINO_{n:07d}")


# -- identifier minting -------------------------------------------------------

def test_first_mint():
    reg = IdRegistry()
    assert reg.mint("mini#Pathway1") == minted(1)


def test_mint_is_idempotent():
    reg = IdRegistry()
    assert reg.mint("k") == reg.mint("k")
    assert len(reg) == 1


def test_batch_assignment_sorted():
    for order in (["b", "a"], ["a", "b"]):
        reg = IdRegistry()
        reg.mint_batch(set(order))
        assert reg.entries["a"] == minted(1)
        assert reg.entries["b"] == minted(2)


def test_counter_overflow():
    reg = IdRegistry()
    reg.next_counter = 10_000_000
    with pytest.raises(CounterOverflowError):
        reg.mint("k")


def test_registry_round_trip(tmp_path):
    reg = IdRegistry()
    reg.mint_batch({"a", "b", "c"})
    path = tmp_path / "registry.tsv"
    reg.dump(path)
    loaded = IdRegistry.load(path)
    assert loaded.entries == reg.entries
    assert loaded.next_counter == reg.next_counter
    assert loaded.mint("d") == minted(4)


def test_registry_rejects_duplicate_iri(tmp_path):
    path = tmp_path / "registry.tsv"
    path.write_text(
        "a\thttp://purl.obolibrary.org/obo/HINO_0000001\n"
        "b\thttp://purl.obolibrary.org/obo/HINO_0000001\n"
    )
    with pytest.raises(RegistryConflictError):
        IdRegistry.load(path)


def test_registry_merge_disjoint():
    a = IdRegistry()
    a.mint_batch({"x#1", "x#2"})
    b = IdRegistry()
    b.next_counter = 100
    b.mint("y#1")
    a.merge(b)
    assert len(a) == 3
    assert a.entries["y#1"] == minted(100)
    assert a.mint("z#1") == minted(101)


def test_registry_merge_agreeing_entries_are_fine():
    a = IdRegistry()
    a.mint("x#1")
    b = IdRegistry()
    b.mint("x#1")
    a.merge(b)
    assert len(a) == 1


def test_registry_merge_conflicts_error():
    a = IdRegistry()
    a.mint("x#1")
    b = IdRegistry()
    b.next_counter = 2
    b.mint("x#1")  # same key, different id
    with pytest.raises(RegistryConflictError):
        a.merge(b)
    c = IdRegistry()
    c.mint("other#key")  # different key, same id as a's
    with pytest.raises(RegistryConflictError):
        a.merge(c)


# -- routing ------------------------------------------------------------------

def _pathway(taxon: str | None) -> tuple[PathwayRec, bool]:
    return PathwayRec(Iri("http://x.test/p"), "p"), taxon == "9606"


def test_route_human_pathway():
    rec, human = _pathway("9606")
    assert route_superclass(rec, human) == KnownIri.ino_human_molecular_pathway


def test_route_nonhuman_pathway():
    rec, human = _pathway("1773")
    assert route_superclass(rec, human) == KnownIri.ino_pathway


def test_route_small_molecule_with_chebi():
    rec = BioPaxEntity(
        Iri("http://x.test/sm"),
        EntityKind.SMALL_MOLECULE,
        xrefs=[XrefRec("ChEBI", "CHEBI:29108", XrefKind.UNIFICATION)],
    )
    assert route_superclass(rec) == obo("CHEBI_29108")


def test_route_small_molecule_without_chebi():
    rec = BioPaxEntity(Iri("http://x.test/sm"), EntityKind.SMALL_MOLECULE)
    assert route_superclass(rec) == KnownIri.anchor_small_molecule


def test_route_interactions_under_process_branch():
    rec = BioPaxEntity(Iri("http://x.test/r"), EntityKind.BIOCHEMICAL_REACTION)
    assert route_superclass(rec) == KnownIri.ino_interaction


# -- citation simplification --------------------------------------------------

def test_simplify_citation():
    prop, value = simplify_citation(XrefRec("pubmed", "18023358", XrefKind.PUBLICATION))
    assert value == Literal("PMID:18023358")
    assert prop == KnownIri.citation


def test_simplify_citation_rejects_empty():
    with pytest.raises(NonNumericPmidError):
        simplify_citation(XrefRec("pubmed", "", XrefKind.PUBLICATION))


def test_simplify_citation_rejects_non_publication():
    with pytest.raises(ValueError):
        simplify_citation(XrefRec("pubmed", "1", XrefKind.RELATIONSHIP))


# -- whole-document conversion ------------------------------------------------

@pytest.fixture(scope="module")
def tlr4_converted(fixtures_dir):
    g = parse_rdf_xml((fixtures_dir / "mini_tlr4.owl").read_bytes())
    doc = extract_document(g, source_id="mini_tlr4")
    return convert(doc, IdRegistry())


@pytest.fixture(scope="module")
def mixed_converted(fixtures_dir):
    g = parse_rdf_xml((fixtures_dir / "mixed_species.owl").read_bytes())
    doc = extract_document(g, source_id="mixed_species")
    return convert(doc, IdRegistry())


def test_empty_document_converts_to_nothing():
    onto, imports, report = convert(BioPaxDocument(), IdRegistry())
    assert not onto.classes and not onto.axioms
    assert len(imports) == 0
    assert report.classes_minted == 0


def test_pathway_axiom_shape(tlr4_converted):
    onto, _, _ = tlr4_converted
    pathway_cls = next(i for i, l in onto.classes.items() if l.startswith("Toll Like"))
    axioms = onto.axioms_about(pathway_cls)
    order = [a for a in axioms if a.property == KnownIri.rel_pathway_order]
    parts = [a for a in axioms if a.property == KnownIri.rel_has_part]
    located = [a for a in axioms if a.property == KnownIri.rel_located_in]
    named = [a for a in axioms if a.kind is AxiomKind.SUBCLASS_OF_NAMED]
    assert len(order) == 9
    assert len(parts) == 9
    assert [a.target for a in located] == [obo("NCBITaxon_9606")]
    assert [a.target for a in named] == [KnownIri.ino_human_molecular_pathway]


def test_steps_have_part_and_precedes(tlr4_converted):
    onto, _, _ = tlr4_converted
    step_classes = [i for i, l in onto.classes.items() if l.startswith("PathwayStep")]
    assert len(step_classes) == 9
    part_count = sum(
        1
        for cls in step_classes
        for a in onto.axioms_about(cls)
        if a.property == KnownIri.rel_has_part
    )
    precedes_count = sum(
        1
        for cls in step_classes
        for a in onto.axioms_about(cls)
        if a.property == KnownIri.rel_precedes
    )
    assert part_count == 9
    assert precedes_count == 8


def test_step_labels_follow_minted_counter(tlr4_converted):
    onto, _, _ = tlr4_converted
    for cls, label in onto.classes.items():
        if label.startswith("PathwayStep"):
            assert label == f"PathwayStep{int(cls.value[-7:])}"


def test_conversion_is_deterministic(fixtures_dir):
    g = parse_rdf_xml((fixtures_dir / "mixed_species.owl").read_bytes())
    doc = extract_document(g, source_id="mixed_species")
    first = convert(doc, IdRegistry())
    second = convert(doc, IdRegistry())
    assert first[0].to_graph() == second[0].to_graph()
    assert first[1] == second[1]
    assert first[2].to_json() == second[2].to_json()


def test_label_totality(tlr4_converted, mixed_converted):
    for onto, _, report in (tlr4_converted, mixed_converted):
        assert all(label for label in onto.classes.values())
    _, _, mixed_report = mixed_converted
    assert mixed_report.fallback_labels  # the unnamed Rna entity


def test_axiom_conservation(fixtures_dir, tlr4_converted):
    g = parse_rdf_xml((fixtures_dir / "mini_tlr4.owl").read_bytes())
    doc = extract_document(g, source_id="mini_tlr4")
    onto, _, _ = tlr4_converted
    step_refs = sum(len(p.step_order) for p in doc.pathways.values())
    order_axioms = [a for a in onto.axioms if a.property == KnownIri.rel_pathway_order]
    part_axioms = [a for a in onto.axioms if a.property == KnownIri.rel_has_part]
    process_refs = sum(len(s.step_processes) for s in doc.steps.values())
    assert len(order_axioms) == step_refs
    assert len(part_axioms) >= process_refs


def test_exactly_one_human_pathway(mixed_converted):
    onto, _, _ = mixed_converted
    human = [
        a
        for a in onto.axioms
        if a.kind is AxiomKind.SUBCLASS_OF_NAMED
        and a.target == KnownIri.ino_human_molecular_pathway
        and a.subject.value.startswith("http://purl.obolibrary.org/obo/HINO_")
    ]
    assert len(human) == 1


def test_species_rewriting(mixed_converted):
    onto, imports, _ = mixed_converted
    assert obo("NCBITaxon_9606") in imports
    assert obo("NCBITaxon_1773") in imports


def test_location_mapping(mixed_converted):
    onto, imports, _ = mixed_converted
    protein_cls = next(
        i for i, l in onto.classes.items() if l == "Exogenous Particulate antigen (Ag)"
    )
    located = [
        a for a in onto.axioms_about(protein_cls) if a.property == KnownIri.rel_located_in
    ]
    assert [a.target for a in located] == [obo("GO_0032010")]
    assert obo("GO_0032010") in imports
    # the xref-less location becomes a minted class instead
    assert any(l == "granuloma interior" for l in onto.classes.values())


def test_citations_and_source_ids_annotated(mixed_converted):
    onto, _, report = mixed_converted
    pathway_cls = next(
        i for i, l in onto.classes.items() if l == "Response of Mtb to phagocytosis"
    )
    annotations = onto.annotations[pathway_cls]
    assert (KnownIri.citation, Literal("PMID:18023358")) in annotations
    assert any(
        prop == KnownIri.db_xref and "Pathway1" in value.lexical
        for prop, value in annotations
    )
    assert report.citations_simplified == 1


def test_mixed_organism_pathways_reported(mixed_converted):
    _, _, report = mixed_converted
    assert len(report.mixed_organism_pathways) == 1


def test_report_serializes_to_json(mixed_converted):
    _, _, report = mixed_converted
    payload = json.loads(report.to_json())
    assert payload["classes_minted"] == report.classes_minted
    assert "restrictions" in payload["axioms"]


def test_import_set_round_trip(tmp_path, mixed_converted):
    _, imports, _ = mixed_converted
    path = tmp_path / "requests.txt"
    imports.dump(path)
    assert ImportRequestSet.load(path) == imports


def test_shared_registry_never_collides(fixtures_dir):
    reg = IdRegistry()
    for name in ("mini_tlr4.owl", "mixed_species.owl"):
        g = parse_rdf_xml((fixtures_dir / name).read_bytes())
        convert(extract_document(g, source_id=name.split(".")[0]), reg)
    assert len(set(reg.entries.values())) == len(reg.entries)


def test_subject_scan_of_converted_pathway(tlr4_converted):
    onto, _, _ = tlr4_converted
    g = onto.to_graph()
    pathway_cls = next(i for i, l in onto.classes.items() if l.startswith("Toll Like"))
    about = g.match(s=pathway_cls)
    labels = [t for t in about if t.predicate.value.endswith("label")]
    subclass = [t for t in about if t.predicate.value.endswith("subClassOf")]
    assert len(labels) == 1
    assert len(subclass) >= 9  # the order/part/location restrictions plus the anchor


def test_classes_only_lint_clean(tlr4_converted, mixed_converted):
    for onto, imports, _ in (tlr4_converted, mixed_converted):
        assert lint_classes_only(onto.to_graph(), imports) == []


def test_lint_flags_individual_assertion(tlr4_converted):
    onto, imports, _ = tlr4_converted
    g = onto.to_graph().copy()
    g.add(Triple(Iri("http://x.test/instance"), RDF_TYPE, minted(1)))
    assert any("individual assertion" in v for v in lint_classes_only(g, imports))


def test_lint_flags_undeclared_filler():
    g = Graph()
    subject = Iri("http://x.test/c")
    g.add(Triple(subject, RDF_TYPE, Iri("http://www.w3.org/2002/07/owl#Class")))
    g.add(
        Triple(
            subject,
            Iri("http://www.w3.org/2000/01/rdf-schema#subClassOf"),
            Iri("http://x.test/ghost"),
        )
    )
    assert any("ghost" in v for v in lint_classes_only(g))
