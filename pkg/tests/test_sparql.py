import json
import random

import pytest

from pathonto.errors import QuerySyntaxError, UnsupportedFeatureError
from pathonto.rdf.model import Graph, Iri, Literal, Triple
from pathonto.rdf.turtle import parse_turtle
from pathonto.rdf.vocab import RDFS_LABEL, RDFS_SUBCLASSOF, obo
from pathonto.sparql import Variable, evaluate, parse_query

from oracles import brute_force_evaluate
from strategies import random_graph, random_query

SUBCLASS_LISTING = """select distinct ?s, ?l
from <http://purl.obolibrary.org/obo/merged/HINO>
where
{
  ?s rdfs:label ?l .
  ?s rdfs:subClassOf <http://purl.obolibrary.org/obo/INO_0000021>
}"""


def test_parse_subclass_listing():
    ast = parse_query(SUBCLASS_LISTING)
    assert ast.distinct is True
    assert ast.select_vars == ["s", "l"]
    assert ast.from_graph == Iri("http://purl.obolibrary.org/obo/merged/HINO")
    assert len(ast.patterns) == 2
    assert ast.limit is None


def test_parse_self_join():
    ast = parse_query("SELECT ?x WHERE { ?x ?p ?x }")
    assert ast.select_vars == ["x"]


def test_unsupported_features_named():
    for text, feature in [
        ("SELECT ?x WHERE { OPTIONAL { ?x ?p ?o } }", "OPTIONAL"),
        ("SELECT ?x WHERE { ?x ?p ?x FILTER(?x) }", "FILTER"),
        ("SELECT ?x WHERE { ?x ?p ?x } ORDER BY ?x", "ORDER BY"),
        ("SELECT ?x WHERE { { ?x a ?y } UNION { ?x ?p ?x } }", "UNION"),
    ]:
        with pytest.raises(UnsupportedFeatureError) as err:
            parse_query(text)
        assert err.value.feature == feature


def test_syntax_error_position():
    with pytest.raises(QuerySyntaxError) as err:
        parse_query("SELECT ?x WHERE { ?x ?p }")
    assert err.value.line == 1


def test_unclosed_group_rejected():
    with pytest.raises(QuerySyntaxError):
        parse_query("SELECT ?x WHERE { ?x a ?y")


def test_unused_select_variable_rejected():
    with pytest.raises(QuerySyntaxError):
        parse_query("SELECT ?ghost WHERE { ?x a ?y . ?x ?p ?x }")


def test_cost_guard():
    with pytest.raises(QuerySyntaxError) as err:
        parse_query("SELECT ?s WHERE { ?s ?p ?o }")
    assert "cost guard" in str(err.value)


def test_prefix_declaration_overrides_builtin():
    ast = parse_query(
        'PREFIX rdfs: <http://example.test/fake#>\nSELECT ?x WHERE { ?x rdfs:label "v" }'
    )
    assert ast.patterns[0].predicate == Iri("http://example.test/fake#label")


def test_limit_must_be_positive():
    with pytest.raises(QuerySyntaxError):
        parse_query("SELECT ?x WHERE { ?x a ?y } LIMIT 0")


def test_evaluate_subclass_listing(fixtures_dir):
    g = parse_turtle((fixtures_dir / "human_pathways.ttl").read_bytes())
    table = evaluate(parse_query(SUBCLASS_LISTING), g)
    assert table.header == ["s", "l"]
    assert len(table.rows) == 9
    assert (obo("HINO_0026258"), Literal("Signaling by NODAL")) in table.rows


def test_empty_graph_yields_zero_rows():
    table = evaluate(parse_query(SUBCLASS_LISTING), Graph())
    assert table.rows == []


def test_join_order_independence(fixtures_dir):
    g = parse_turtle((fixtures_dir / "human_pathways.ttl").read_bytes())
    swapped = """select distinct ?s, ?l
where {
  ?s rdfs:subClassOf <http://purl.obolibrary.org/obo/INO_0000021> .
  ?s rdfs:label ?l
}"""
    a = evaluate(parse_query(SUBCLASS_LISTING), g)
    b = evaluate(parse_query(swapped), g)
    assert a.rows == b.rows


def test_distinct_deduplicates():
    g = Graph()
    s = Iri("http://x.test/s")
    g.add(Triple(s, RDFS_LABEL, Literal("a")))
    g.add(Triple(s, RDFS_SUBCLASSOF, Iri("http://x.test/c1")))
    g.add(Triple(s, RDFS_SUBCLASSOF, Iri("http://x.test/c2")))
    text = "SELECT DISTINCT ?s WHERE { ?s rdfs:label ?l . ?s rdfs:subClassOf ?c }"
    table = evaluate(parse_query(text), g)
    assert table.rows == [(s,)]
    plain = evaluate(parse_query(text.replace("DISTINCT ", "")), g)
    assert len(plain.rows) == 2


def test_limit_is_prefix_of_larger_limit(fixtures_dir):
    g = parse_turtle((fixtures_dir / "human_pathways.ttl").read_bytes())
    base = parse_query(SUBCLASS_LISTING)
    tables = {}
    for k in (3, 4, 9):
        q = parse_query(SUBCLASS_LISTING + f" LIMIT {k}")
        tables[k] = evaluate(q, g).rows
    assert tables[3] == tables[4][:3]
    assert tables[4] == tables[9][:4]
    assert tables[9] == evaluate(base, g).rows


def test_literal_objects_match():
    g = Graph()
    s = Iri("http://x.test/s")
    g.add(Triple(s, RDFS_LABEL, Literal("needle")))
    g.add(Triple(Iri("http://x.test/t"), RDFS_LABEL, Literal("other")))
    table = evaluate(parse_query('SELECT ?s WHERE { ?s rdfs:label "needle" }'), g)
    assert table.rows == [(s,)]


def test_results_json_shape(fixtures_dir):
    g = parse_turtle((fixtures_dir / "human_pathways.ttl").read_bytes())
    table = evaluate(parse_query(SUBCLASS_LISTING + " LIMIT 1"), g)
    payload = json.loads(table.to_json())
    assert payload["head"]["vars"] == ["s", "l"]
    (binding,) = payload["results"]["bindings"]
    assert binding["s"]["type"] == "uri"
    assert binding["l"]["type"] == "literal"


def test_tsv_shape():
    g = Graph()
    g.add(Triple(Iri("http://x.test/s"), RDFS_LABEL, Literal('tab\there')))
    table = evaluate(parse_query("SELECT ?s ?l WHERE { ?s rdfs:label ?l }"), g)
    lines = table.to_tsv().splitlines()
    assert lines[0] == "?s\t?l"
    assert lines[1] == '<http://x.test/s>\t"tab\\there"'


def test_random_queries_match_brute_force():
    rng = random.Random(987)
    mismatches = 0
    for _ in range(200):
        g = random_graph(rng, max_triples=60)
        q = random_query(rng, g)
        fast = evaluate(q, g).rows
        slow = brute_force_evaluate(q, g)
        if fast != slow:
            mismatches += 1
    assert mismatches == 0


def test_variable_repr():
    assert str(Variable("s")) == "?s"
