import json

import pytest
from fastapi.testclient import TestClient

from pathonto.biopax import extract_document
from pathonto.importer import ImportSpec, extract_closure, merge
from pathonto.mapping import IdRegistry, convert
from pathonto.rdf.rdfxml import parse_rdf_xml
from pathonto.rdf.turtle import parse_turtle
from pathonto.rdf.vocab import obo
from pathonto.service import Store, create_app
from pathonto.sparql import evaluate, parse_query
from pathonto.stats import compute_stats

LISTING = """select distinct ?s, ?l
from <http://purl.obolibrary.org/obo/merged/HINO>
where { ?s rdfs:label ?l . ?s rdfs:subClassOf <http://purl.obolibrary.org/obo/INO_0000021> }"""


@pytest.fixture(scope="module")
def fixture_store(fixtures_dir) -> Store:
    return Store(parse_turtle((fixtures_dir / "human_pathways.ttl").read_bytes()))


@pytest.fixture(scope="module")
def client(fixture_store) -> TestClient:
    return TestClient(create_app(fixture_store))


@pytest.fixture(scope="module")
def tlr4_client(fixtures_dir) -> TestClient:
    g = parse_rdf_xml((fixtures_dir / "mini_tlr4.owl").read_bytes())
    doc = extract_document(g, source_id="mini_tlr4")
    onto, imports, _ = convert(doc, IdRegistry())
    taxonomy = parse_turtle((fixtures_dir / "taxonomy.ttl").read_bytes())
    module = extract_closure(
        ImportSpec(
            taxonomy,
            seeds={i for i in imports.iris if "NCBITaxon" in i.value},
            top=obo("NCBITaxon_1"),
        )
    )
    merged = merge(onto.to_graph(), [module])
    return TestClient(create_app(Store(merged)))


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json()["status"] == "ok"


def test_stats_endpoint_matches_library(client, fixture_store):
    response = client.get("/stats")
    assert response.status_code == 200
    assert response.json() == compute_stats(fixture_store.graph).to_dict()


def test_stats_on_empty_store():
    from pathonto.rdf.model import Graph

    empty_client = TestClient(create_app(Store(Graph())))
    assert empty_client.get("/stats").json() == {
        "class_count": 0,
        "object_property_count": 0,
        "datatype_property_count": 0,
        "annotation_property_count": 0,
    }


def test_sparql_post_matches_evaluate(client, fixture_store):
    response = client.post("/sparql", content=LISTING)
    assert response.status_code == 200
    payload = response.json()
    table = evaluate(parse_query(LISTING), fixture_store.graph)
    assert payload["head"]["vars"] == table.header
    assert len(payload["results"]["bindings"]) == 9
    assert payload == json.loads(table.to_json())


def test_sparql_get_with_query_param(client):
    response = client.get("/sparql", params={"query": LISTING})
    assert response.status_code == 200
    assert len(response.json()["results"]["bindings"]) == 9


def test_sparql_form_encoded_post(client):
    response = client.post("/sparql", data={"query": LISTING})
    assert response.status_code == 200
    assert len(response.json()["results"]["bindings"]) == 9


def test_sparql_tsv_via_accept(client):
    response = client.post(
        "/sparql", content=LISTING, headers={"accept": "text/tab-separated-values"}
    )
    assert response.status_code == 200
    lines = response.text.splitlines()
    assert lines[0] == "?s\t?l"
    assert len(lines) == 10


def test_sparql_syntax_error_is_400(client):
    response = client.post("/sparql", content="SELECT ?x WHERE { ?x ?p }")
    assert response.status_code == 400
    assert "expected" in response.json()["error"] or "IRI" in response.json()["error"]


def test_sparql_unsupported_feature_is_400(client):
    response = client.post(
        "/sparql", content="SELECT ?x WHERE { OPTIONAL { ?x a ?y } }"
    )
    assert response.status_code == 400
    assert "OPTIONAL" in response.json()["error"]


def test_sparql_from_mismatch_is_400(client):
    bad = LISTING.replace("merged/HINO", "merged/OTHER")
    response = client.post("/sparql", content=bad)
    assert response.status_code == 400


def test_sparql_pattern_cap_is_413(fixtures_dir):
    store = Store(
        parse_turtle((fixtures_dir / "human_pathways.ttl").read_bytes()),
        pattern_cap=1,
    )
    capped = TestClient(create_app(store))
    response = capped.post("/sparql", content=LISTING)
    assert response.status_code == 413


def test_sparql_row_cap_applies(fixtures_dir):
    store = Store(
        parse_turtle((fixtures_dir / "human_pathways.ttl").read_bytes()),
        max_rows_cap=4,
    )
    capped = TestClient(create_app(store))
    response = capped.post("/sparql", content=LISTING)
    assert len(response.json()["results"]["bindings"]) == 4


def test_sparql_unacceptable_media_is_406(client):
    response = client.post(
        "/sparql", content=LISTING, headers={"accept": "application/xml"}
    )
    assert response.status_code == 406


def test_term_page_json(tlr4_client):
    # minted id of the pathway record under sorted-key assignment
    response = tlr4_client.get("/term/HINO_0000010", headers={"accept": "application/json"})
    assert response.status_code == 200
    page = response.json()
    assert page["label"] == "Toll Like Receptor 4 (TLR4) Cascade"
    assert any("pathwayOrder some " in a for a in page["asserted_axioms"])


def test_term_page_turtle(tlr4_client):
    response = tlr4_client.get("/term/HINO_0000010", headers={"accept": "text/turtle"})
    assert response.status_code == 200
    hood = parse_turtle(response.text.encode())
    label_triples = [
        t for t in hood
        if t.predicate.value.endswith("label")
        and getattr(t.object, "lexical", None) == "Toll Like Receptor 4 (TLR4) Cascade"
    ]
    assert label_triples


def test_term_renderings_are_coherent(tlr4_client):
    json_page = tlr4_client.get(
        "/term/HINO_0000010", headers={"accept": "application/json"}
    ).json()
    hood = parse_turtle(
        tlr4_client.get("/term/HINO_0000010", headers={"accept": "text/turtle"}).text.encode()
    )
    hood_labels = {
        t.object.lexical
        for t in hood
        if t.predicate.value.endswith("label") and hasattr(t.object, "lexical")
    }
    assert json_page["label"] in hood_labels
    # every axiom filler label the page shows is a label in the neighborhood
    for axiom in json_page["asserted_axioms"]:
        if " some " in axiom:
            filler_label = axiom.split(" some ", 1)[1]
            assert filler_label in hood_labels


def test_term_404(tlr4_client):
    response = tlr4_client.get("/term/HINO_9999999")
    assert response.status_code == 404


def test_term_406(tlr4_client):
    response = tlr4_client.get(
        "/term/HINO_0000010", headers={"accept": "application/xml"}
    )
    assert response.status_code == 406


def test_service_is_read_only(client):
    before = client.get("/stats").json()
    client.post("/sparql", content=LISTING)
    client.get("/term/HINO_0026258")
    assert client.get("/stats").json() == before
