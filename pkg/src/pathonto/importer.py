"""Hierarchy-closure extraction from external reference ontologies.

Given seed terms, a source graph, and a top anchor, compute either the
full set of classes on seed-to-top subClassOf paths (AllIntermediates) or
just the seeds re-attached to their nearest kept ancestors
(NoIntermediates, edges transitively reduced). Only rdfs:subClassOf edges
between named classes are traversed; restriction superclasses in sources
are ignored.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from pathlib import Path

from pathonto.errors import (
    CycleDetectedError,
    PathontoError,
    SeedNotFoundError,
    TopUnreachableError,
)
from pathonto.rdf.model import Graph, Iri, Literal, Triple
from pathonto.rdf.vocab import OWL_CLASS, RDF_TYPE, RDFS_LABEL, RDFS_SUBCLASSOF


class IntermediatePolicy(enum.Enum):
    ALL_INTERMEDIATES = "AllIntermediates"
    NO_INTERMEDIATES = "NoIntermediates"


@dataclass
class ImportSpec:
    source: Graph
    seeds: set[Iri]
    top: Iri
    intermediate_policy: IntermediatePolicy = IntermediatePolicy.ALL_INTERMEDIATES
    annotation_properties: list[Iri] = field(default_factory=lambda: [RDFS_LABEL])

    def __post_init__(self) -> None:
        if not self.seeds:
            raise ValueError("seeds must be non-empty")
        if self.top in self.seeds:
            raise ValueError("top anchor cannot be one of the seeds")


@dataclass
class ImportModule:
    graph: Graph
    included_terms: set[Iri]
    missing_labels: set[Iri] = field(default_factory=set)


def _named_superclass_edges(g: Graph) -> dict[Iri, set[Iri]]:
    edges: dict[Iri, set[Iri]] = {}
    for t in g.match(p=RDFS_SUBCLASSOF):
        if isinstance(t.subject, Iri) and isinstance(t.object, Iri):
            edges.setdefault(t.subject, set()).add(t.object)
    return edges


def _check_acyclic(edges: dict[Iri, set[Iri]]) -> None:
    WHITE, GRAY, BLACK = 0, 1, 2
    color: dict[Iri, int] = {}
    for start in sorted(edges, key=lambda i: i.value):
        if color.get(start, WHITE) != WHITE:
            continue
        stack: list[tuple[Iri, list[Iri]]] = [(start, [start])]
        while stack:
            node, path = stack.pop()
            state = color.get(node, WHITE)
            if state == BLACK:
                continue
            if state == GRAY:
                color[node] = BLACK
                continue
            color[node] = GRAY
            stack.append((node, path))  # revisit to blacken after children
            for parent in sorted(edges.get(node, ()), key=lambda i: i.value):
                pstate = color.get(parent, WHITE)
                if pstate == GRAY:
                    cycle = path[path.index(parent):] if parent in path else [node, parent]
                    raise CycleDetectedError([i.value for i in cycle + [parent]])
                if pstate == WHITE:
                    stack.append((parent, path + [parent]))


def _ancestors(edges: dict[Iri, set[Iri]], node: Iri) -> set[Iri]:
    """Upward closure including the node itself (BFS over subClassOf)."""
    seen = {node}
    frontier = [node]
    while frontier:
        current = frontier.pop()
        for parent in edges.get(current, ()):
            if parent not in seen:
                seen.add(parent)
                frontier.append(parent)
    return seen


def extract_closure(spec: ImportSpec) -> ImportModule:
    """Compute a merge-ready hierarchy module for the spec's seeds."""
    source_terms = {t for t in spec.source.terms() if isinstance(t, Iri)}
    missing = sorted(i.value for i in (spec.seeds | {spec.top}) if i not in source_terms)
    if missing:
        raise SeedNotFoundError(missing)

    edges = _named_superclass_edges(spec.source)
    _check_acyclic(edges)

    ancestor_cache: dict[Iri, set[Iri]] = {}

    def up(node: Iri) -> set[Iri]:
        if node not in ancestor_cache:
            ancestor_cache[node] = _ancestors(edges, node)
        return ancestor_cache[node]

    reaches_top = {n for n in source_terms if spec.top in up(n)}
    for seed in sorted(spec.seeds, key=lambda i: i.value):
        if seed not in reaches_top:
            raise TopUnreachableError(seed.value, spec.top.value)

    if spec.intermediate_policy is IntermediatePolicy.ALL_INTERMEDIATES:
        included: set[Iri] = set()
        for seed in spec.seeds:
            included |= up(seed) & reaches_top
        kept_edges = {
            (child, parent)
            for child, parents in edges.items()
            if child in included
            for parent in parents
            if parent in included
        }
    else:
        included = spec.seeds | {spec.top}
        # Covering relation of reachability restricted to the kept terms,
        # then a prune pass: drop any edge whose removal leaves every seed
        # a path to top, so the result is minimal for seed-to-top
        # reachability (cover edges can still be redundant in a DAG).
        order = {
            (a, b)
            for a in included
            for b in included
            if a != b and b in up(a)
        }
        kept_edges = {
            (a, b)
            for (a, b) in order
            if not any((a, c) in order and (c, b) in order for c in included)
        }

        def seeds_reach_top(edge_set: set[tuple[Iri, Iri]]) -> bool:
            adjacency: dict[Iri, set[Iri]] = {}
            for child, parent in edge_set:
                adjacency.setdefault(child, set()).add(parent)
            return all(spec.top in _ancestors(adjacency, seed) for seed in spec.seeds)

        for edge in sorted(kept_edges, key=lambda e: (e[0].value, e[1].value)):
            trial = kept_edges - {edge}
            if seeds_reach_top(trial):
                kept_edges = trial

    module_graph = Graph()
    for term in included:
        module_graph.add(Triple(term, RDF_TYPE, OWL_CLASS))
    for child, parent in kept_edges:
        module_graph.add(Triple(child, RDFS_SUBCLASSOF, parent))
    missing_labels: set[Iri] = set()
    for term in included:
        found = False
        for prop in spec.annotation_properties:
            for t in spec.source.match(s=term, p=prop):
                if isinstance(t.object, Literal):
                    module_graph.add(t)
                    found = True
        if not found:
            missing_labels.add(term)
    return ImportModule(module_graph, included, missing_labels)


def merge(
    base: Graph,
    modules: list[ImportModule],
    warnings: list[str] | None = None,
) -> Graph:
    """Set-union of the base graph and module graphs.

    Duplicate declarations collapse by set semantics; when two inputs
    label the same IRI differently the first wins and a warning is
    recorded.
    """
    merged = Graph()
    labels: dict = {}

    def absorb(g: Graph) -> None:
        for t in g.sorted_triples():
            if t.predicate == RDFS_LABEL and isinstance(t.object, Literal):
                known = labels.get(t.subject)
                if known is None:
                    labels[t.subject] = t.object
                elif known != t.object:
                    if warnings is not None:
                        warnings.append(
                            f"conflicting label for {t.subject}: keeping {known}, dropping {t.object}"
                        )
                    continue
            merged.add(t)

    absorb(base)
    for module in modules:
        absorb(module.graph)
    return merged


# ---------------------------------------------------------------------------
# Import-spec files (small key-value format: source path, top IRI, policy)
# ---------------------------------------------------------------------------

def load_import_spec(
    path: str | Path,
    seeds: set[Iri],
    parse_source,
) -> ImportSpec:
    """Read a spec file and build an ImportSpec over the given seeds.

    Keys: ``source`` (path, relative to the spec file), ``top`` (IRI),
    ``policy`` (AllIntermediates | NoIntermediates), and optional
    ``prefix`` restricting the seed set to IRIs with that prefix. The top
    anchor is dropped from the seeds if present.
    """
    path = Path(path)
    values: dict[str, str] = {}
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise PathontoError(f"{path}:{lineno}: expected 'key = value'")
        key, _, value = line.partition("=")
        values[key.strip()] = value.strip()
    for required in ("source", "top", "policy"):
        if required not in values:
            raise PathontoError(f"{path}: missing required key {required!r}")
    try:
        policy = IntermediatePolicy(values["policy"])
    except ValueError:
        raise PathontoError(f"{path}: unknown policy {values['policy']!r}") from None
    top = Iri(values["top"])
    if "prefix" in values:
        seeds = {s for s in seeds if s.value.startswith(values["prefix"])}
    seeds = seeds - {top}
    if not seeds:
        raise PathontoError(f"{path}: no seeds remain after filtering")
    source_path = path.parent / values["source"]
    return ImportSpec(source=parse_source(source_path), seeds=seeds, top=top,
                      intermediate_policy=policy)
