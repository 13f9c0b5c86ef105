"""Operator entry point: convert, import, merge, stats, query, serve.

Exit codes: 0 success, 1 data error (parse/conversion/extraction), 2 usage.
"""

from __future__ import annotations

import json
import os
import sys
from pathlib import Path

import click

from pathonto import __version__, biopax
from pathonto.errors import PathontoError
from pathonto.importer import ImportModule, extract_closure, load_import_spec, merge
from pathonto.mapping import IdRegistry, ImportRequestSet, convert
from pathonto.rdf.model import Graph
from pathonto.rdf.rdfxml import parse_rdf_xml
from pathonto.rdf.turtle import parse_turtle, serialize_turtle
from pathonto.service import DEFAULT_GRAPH_IRI, Store, create_app
from pathonto.stats import compute_stats

BIND_ENV = "PATHONTO_BIND"


def load_graph(path: str | Path) -> Graph:
    """Parse a file by extension: .ttl is Turtle, anything else RDF/XML."""
    path = Path(path)
    data = path.read_bytes()
    if path.suffix.lower() == ".ttl":
        return parse_turtle(data)
    return parse_rdf_xml(data)


def _fail(exc: Exception) -> None:
    click.echo(f"error: {exc}", err=True)
    sys.exit(1)


@click.group()
@click.version_option(__version__)
def main() -> None:
    """Pathway-instance to ontology-class compiler and term service."""


@main.command("convert")
@click.argument("biopax_files", nargs=-1, type=click.Path(exists=True, dir_okay=False))
@click.option("--registry", "registry_path", required=True, type=click.Path(dir_okay=False),
              help="Minted-id ledger (TSV); created if missing, updated in place.")
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False),
              help="Converted ontology (Turtle).")
@click.option("--report", "report_path", required=True, type=click.Path(dir_okay=False),
              help="Conversion report (JSON).")
@click.option("--import-requests", "requests_path", required=True, type=click.Path(dir_okay=False),
              help="External IRIs needed to close the output (newline-delimited).")
@click.option("--skipped-report", "skipped_path", type=click.Path(dir_okay=False),
              help="Optional TSV of BioPAX types not turned into records.")
@click.option("--organism-as-occurs-in", is_flag=True, default=False,
              help="Link organisms with occurs-in instead of the published located_in shape.")
def cmd_convert(biopax_files, registry_path, out_path, report_path, requests_path,
                skipped_path, organism_as_occurs_in) -> None:
    """Convert BioPAX RDF/XML files into a classes-only ontology."""
    if not biopax_files:
        raise click.UsageError("at least one BioPAX file is required")
    registry = IdRegistry.load(registry_path) if Path(registry_path).exists() else IdRegistry()
    merged = Graph()
    requests = ImportRequestSet()
    reports = []
    skipped_rows: dict[str, int] = {}
    try:
        for file_path in biopax_files:
            g = parse_rdf_xml(Path(file_path).read_bytes())
            doc = biopax.extract_document(g, source_id=Path(file_path).stem)
            onto, file_requests, report = convert(
                doc, registry, organism_as_occurs_in=organism_as_occurs_in
            )
            merged.update(onto.to_graph())
            requests.iris |= file_requests.iris
            reports.append(json.loads(report.to_json()))
            for type_iri, count in doc.skipped_report_rows():
                skipped_rows[type_iri] = skipped_rows.get(type_iri, 0) + count
    except PathontoError as exc:
        _fail(exc)
    Path(out_path).write_bytes(serialize_turtle(merged))
    registry.dump(registry_path)
    requests.dump(requests_path)
    Path(report_path).write_text(
        json.dumps({"files": reports}, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    if skipped_path:
        lines = [f"{iri}\t{count}" for iri, count in sorted(skipped_rows.items())]
        Path(skipped_path).write_text("\n".join(lines) + ("\n" if lines else ""), encoding="utf-8")
    click.echo(
        f"converted {len(biopax_files)} file(s): {len(merged)} triples, "
        f"{len(registry)} registry entries, {len(requests)} external terms"
    )


@main.command("import")
@click.option("--spec", "spec_path", required=True, type=click.Path(exists=True, dir_okay=False),
              help="Key-value spec file (source path, top IRI, policy).")
@click.option("--seeds", "seeds_path", required=True, type=click.Path(exists=True, dir_okay=False),
              help="Seed IRIs, newline-delimited (a convert --import-requests file).")
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False))
def cmd_import(spec_path, seeds_path, out_path) -> None:
    """Extract a hierarchy-closure module from a reference ontology."""
    try:
        seeds = ImportRequestSet.load(seeds_path).iris
        spec = load_import_spec(spec_path, seeds, load_graph)
        module = extract_closure(spec)
    except PathontoError as exc:
        _fail(exc)
    Path(out_path).write_bytes(serialize_turtle(module.graph))
    note = f", {len(module.missing_labels)} missing labels" if module.missing_labels else ""
    click.echo(f"imported {len(module.included_terms)} terms{note}")


@main.command("merge")
@click.argument("files", nargs=-1, required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False))
def cmd_merge(files, out_path) -> None:
    """Merge ontology files into one canonical Turtle file."""
    warnings: list[str] = []
    try:
        base = load_graph(files[0])
        modules = [ImportModule(load_graph(f), set()) for f in files[1:]]
        merged = merge(base, modules, warnings=warnings)
    except PathontoError as exc:
        _fail(exc)
    Path(out_path).write_bytes(serialize_turtle(merged))
    for warning in warnings:
        click.echo(f"warning: {warning}", err=True)
    click.echo(f"merged {len(files)} file(s): {len(merged)} triples")


@main.command("stats")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
def cmd_stats(file) -> None:
    """Print declaration counts for an ontology file."""
    try:
        stats = compute_stats(load_graph(file))
    except PathontoError as exc:
        _fail(exc)
    click.echo(f"classes: {stats.class_count}")
    click.echo(f"object properties: {stats.object_property_count}")
    click.echo(f"datatype properties: {stats.datatype_property_count}")
    click.echo(f"annotation properties: {stats.annotation_property_count}")


@main.command("query")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--query", "query_text", help="Query text.")
@click.option("--query-file", type=click.Path(exists=True, dir_okay=False),
              help="Read the query from a file.")
@click.option("--format", "output_format", type=click.Choice(["tsv", "json"]), default="tsv",
              show_default=True)
@click.option("--graph-iri", default=DEFAULT_GRAPH_IRI, show_default=True,
              help="Graph IRI a FROM clause must name.")
def cmd_query(file, query_text, query_file, output_format, graph_iri) -> None:
    """Run a query against an ontology file."""
    if (query_text is None) == (query_file is None):
        raise click.UsageError("provide exactly one of --query / --query-file")
    if query_file is not None:
        query_text = Path(query_file).read_text(encoding="utf-8")
    try:
        store = Store(load_graph(file), graph_iri=graph_iri)
        table = store.query(query_text)
    except PathontoError as exc:
        _fail(exc)
    if output_format == "json":
        click.echo(table.to_json())
    else:
        click.echo(table.to_tsv(), nl=False)


@main.command("serve")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--bind", default=None,
              help=f"host:port (default from ${BIND_ENV}, else 127.0.0.1:8035).")
@click.option("--graph-iri", default=DEFAULT_GRAPH_IRI, show_default=True)
@click.option("--ui-dir", type=click.Path(exists=True, file_okay=False),
              help="Static console files to mount under /ui.")
def cmd_serve(file, bind, graph_iri, ui_dir) -> None:
    """Serve an ontology file over HTTP."""
    import uvicorn

    bind = bind or os.environ.get(BIND_ENV) or "127.0.0.1:8035"
    host, _, port_text = bind.rpartition(":")
    if not host or not port_text.isdigit():
        raise click.UsageError(f"--bind expects host:port, got {bind!r}")
    try:
        store = Store(load_graph(file), graph_iri=graph_iri)
    except PathontoError as exc:
        _fail(exc)
    app = create_app(store, ui_dir=ui_dir)
    uvicorn.run(app, host=host, port=int(port_text), log_level="info")


if __name__ == "__main__":
    main()
