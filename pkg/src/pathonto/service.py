"""HTTP surface: SPARQL endpoint, term pages with content negotiation,
stats, and the static console mount.

The store is a single sealed graph loaded at startup; every endpoint is
read-only, so concurrent requests need no locking.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from urllib.parse import parse_qs

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse, PlainTextResponse
from fastapi.staticfiles import StaticFiles

from pathonto.errors import (
    FromGraphMismatchError,
    QuerySyntaxError,
    TermNotFoundError,
    UnsupportedFeatureError,
)
from pathonto.pages import build_term_page, label_of, term_neighborhood
from pathonto.rdf.model import Graph, Iri
from pathonto.rdf.turtle import serialize_turtle
from pathonto.rdf.vocab import OBO_NS
from pathonto.sparql import QueryAst, ResultTable, evaluate, parse_query
from pathonto.stats import compute_stats

DEFAULT_GRAPH_IRI = "http://purl.obolibrary.org/obo/merged/HINO"

JSON_MEDIA = ("application/sparql-results+json", "application/json")
TSV_MEDIA = ("text/tab-separated-values",)
TURTLE_MEDIA = ("text/turtle", "application/x-turtle")

LOCAL_ID_RE = re.compile(r"[A-Za-z][A-Za-z0-9]*_[A-Za-z0-9]+\Z")


class PatternCapExceeded(Exception):
    def __init__(self, count: int, cap: int):
        super().__init__(f"query has {count} patterns; the cap is {cap}")


@dataclass
class Store:
    """A sealed graph registered under a single graph IRI."""

    graph: Graph
    graph_iri: str = DEFAULT_GRAPH_IRI
    purl_prefix: str = OBO_NS
    max_rows_cap: int = 10_000
    pattern_cap: int = 32

    def __post_init__(self) -> None:
        self.graph.freeze()

    def parse(self, text: str) -> QueryAst:
        ast = parse_query(text)
        if ast.from_graph is not None and ast.from_graph.value != self.graph_iri:
            raise FromGraphMismatchError(ast.from_graph.value, self.graph_iri)
        if len(ast.patterns) > self.pattern_cap:
            raise PatternCapExceeded(len(ast.patterns), self.pattern_cap)
        return ast

    def query(self, text: str, max_rows: int | None = None) -> ResultTable:
        ast = self.parse(text)
        cap = self.max_rows_cap
        if max_rows is not None:
            cap = min(cap, max_rows)
        ast.limit = min(ast.limit, cap) if ast.limit is not None else cap
        return evaluate(ast, self.graph)

    def term(self, local_id: str) -> Iri:
        return Iri(self.purl_prefix + local_id)


def _accepted(header: str | None, offered: tuple[str, ...]) -> str | None:
    """First offered media type acceptable per the Accept header."""
    if not header:
        return offered[0]
    ranges: list[tuple[float, int, str]] = []
    for index, part in enumerate(header.split(",")):
        piece = part.strip()
        if not piece:
            continue
        media, *params = piece.split(";")
        q = 1.0
        for param in params:
            key, _, value = param.strip().partition("=")
            if key == "q":
                try:
                    q = float(value)
                except ValueError:
                    q = 0.0
        ranges.append((-q, index, media.strip().lower()))
    for _, _, media in sorted(ranges):
        if media in ("*/*", "*"):
            return offered[0]
        if media.endswith("/*"):
            family = media[:-2]
            for candidate in offered:
                if candidate.startswith(family + "/"):
                    return candidate
        if media in offered:
            return media
    return None


def create_app(store: Store, ui_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="pathonto term service", docs_url=None, redoc_url=None)

    def error(status: int, message: str) -> JSONResponse:
        return JSONResponse({"error": message}, status_code=status)

    async def run_sparql(request: Request, query_text: str | None) -> Response:
        if query_text is None or not query_text.strip():
            return error(400, "missing query text")
        offered = JSON_MEDIA + TSV_MEDIA
        media = _accepted(request.headers.get("accept"), offered)
        if media is None:
            return error(406, f"acceptable media types: {', '.join(offered)}")
        try:
            table = store.query(query_text)
        except (QuerySyntaxError, UnsupportedFeatureError, FromGraphMismatchError) as exc:
            return error(400, str(exc))
        except PatternCapExceeded as exc:
            return error(413, str(exc))
        if media in TSV_MEDIA:
            return PlainTextResponse(table.to_tsv(), media_type=media)
        return Response(table.to_json(), media_type=media)

    @app.get("/sparql")
    async def sparql_get(request: Request) -> Response:
        return await run_sparql(request, request.query_params.get("query"))

    @app.post("/sparql")
    async def sparql_post(request: Request) -> Response:
        body = (await request.body()).decode("utf-8")
        content_type = request.headers.get("content-type", "")
        query_text = body
        if "application/x-www-form-urlencoded" in content_type:
            fields = parse_qs(body)
            if "query" in fields:
                query_text = fields["query"][0]
            # else: a raw query posted with a form content type (curl's
            # default); treat the body as the query itself
        return await run_sparql(request, query_text)

    @app.get("/term/{local_id}")
    async def term_page(local_id: str, request: Request) -> Response:
        if not LOCAL_ID_RE.match(local_id):
            return error(404, f"malformed term id {local_id!r}")
        iri = store.term(local_id)
        offered = JSON_MEDIA + TURTLE_MEDIA
        media = _accepted(request.headers.get("accept"), offered)
        if media is None:
            return error(406, f"acceptable media types: {', '.join(offered)}")
        try:
            if media in TURTLE_MEDIA:
                neighborhood = term_neighborhood(store.graph, iri)
                return PlainTextResponse(
                    serialize_turtle(neighborhood), media_type=media
                )
            page = build_term_page(store.graph, iri)
        except TermNotFoundError as exc:
            return error(404, str(exc))
        return JSONResponse(page.to_dict(lambda i: label_of(store.graph, i)))

    @app.get("/stats")
    async def stats() -> JSONResponse:
        return JSONResponse(compute_stats(store.graph).to_dict())

    @app.get("/health")
    async def health() -> JSONResponse:
        return JSONResponse({"status": "ok", "triples": len(store.graph)})

    if ui_dir is not None and Path(ui_dir).is_dir():
        app.mount("/ui", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app
