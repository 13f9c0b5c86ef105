"""RDF/XML parser for the subset emitted by BioPAX exporters.

Supported: rdf:about / rdf:ID (resolved against xml:base) / rdf:nodeID on
node elements, nested property elements, rdf:resource, rdf:datatype,
xml:lang, and literal property attributes. Anything involving
rdf:parseType or RDF containers is rejected loudly with its line number
rather than skipped.
"""

from __future__ import annotations

import xml.parsers.expat
from dataclasses import dataclass, field
from urllib.parse import urljoin

from pathonto.errors import (
    UnresolvableBaseError,
    UnsupportedRdfConstructError,
    XmlSyntaxError,
)
from pathonto.rdf.model import BlankNode, Graph, Iri, Literal, Subject, Triple
from pathonto.rdf.vocab import RDF_NS, RDF_TYPE

XML_NS = "http://www.w3.org/XML/1998/namespace"

_NS_SEP = " "


@dataclass
class _Element:
    uri: str
    local: str
    attrs: dict[tuple[str, str], str]
    line: int
    base: str | None
    lang: str | None
    children: list["_Element"] = field(default_factory=list)
    text: list[str] = field(default_factory=list)

    @property
    def name(self) -> str:
        return self.uri + self.local

    def content(self) -> str:
        return "".join(self.text)


def _split_name(name: str) -> tuple[str, str]:
    if _NS_SEP in name:
        uri, local = name.split(_NS_SEP, 1)
        return uri, local
    return "", name


class _TreeBuilder:
    """Expat handler building a minimal element tree with line numbers."""

    def __init__(self) -> None:
        self.parser = xml.parsers.expat.ParserCreate(namespace_separator=_NS_SEP)
        self.parser.StartElementHandler = self._start
        self.parser.EndElementHandler = self._end
        self.parser.CharacterDataHandler = self._chars
        self.root: _Element | None = None
        self._stack: list[_Element] = []

    def _start(self, name: str, attrs: dict[str, str]) -> None:
        uri, local = _split_name(name)
        split_attrs = {_split_name(k): v for k, v in attrs.items()}
        parent = self._stack[-1] if self._stack else None
        base = parent.base if parent else None
        lang = parent.lang if parent else None
        if (XML_NS, "base") in split_attrs:
            base = split_attrs[(XML_NS, "base")]
        if (XML_NS, "lang") in split_attrs:
            lang = split_attrs[(XML_NS, "lang")] or None
        elem = _Element(uri, local, split_attrs, self.parser.CurrentLineNumber, base, lang)
        if parent is None:
            self.root = elem
        else:
            parent.children.append(elem)
        self._stack.append(elem)

    def _end(self, name: str) -> None:
        self._stack.pop()

    def _chars(self, data: str) -> None:
        if self._stack:
            self._stack[-1].text.append(data)


class _RdfXmlReader:
    def __init__(self) -> None:
        self.graph = Graph()
        self._bnode_counter = 0

    def read(self, data: bytes) -> Graph:
        builder = _TreeBuilder()
        try:
            builder.parser.Parse(data, True)
        except xml.parsers.expat.ExpatError as exc:
            raise XmlSyntaxError(
                xml.parsers.expat.errors.messages[exc.code],
                exc.lineno,
                exc.offset,
            ) from exc
        root = builder.root
        if root is None:
            raise XmlSyntaxError("document has no root element")
        if root.uri == RDF_NS and root.local == "RDF":
            for child in root.children:
                self._node_element(child)
        else:
            # Some exporters omit the rdf:RDF wrapper and use a single
            # typed node as the document element.
            self._node_element(root)
        return self.graph

    # -- node elements ---------------------------------------------------

    def _fresh_bnode(self) -> BlankNode:
        node = BlankNode(f"b{self._bnode_counter}")
        self._bnode_counter += 1
        return node

    def _resolve(self, ref: str, base: str | None, line: int) -> Iri:
        if "://" in ref:
            return Iri(ref)
        if base is None:
            raise UnresolvableBaseError(
                f"relative reference {ref!r} at line {line} with no xml:base in scope"
            )
        return Iri(urljoin(base, ref))

    def _subject_of(self, elem: _Element) -> Subject:
        about = elem.attrs.get((RDF_NS, "about"))
        rid = elem.attrs.get((RDF_NS, "ID"))
        node_id = elem.attrs.get((RDF_NS, "nodeID"))
        if sum(x is not None for x in (about, rid, node_id)) > 1:
            raise XmlSyntaxError(
                "rdf:about, rdf:ID and rdf:nodeID are mutually exclusive", elem.line, 0
            )
        if about is not None:
            return self._resolve(about, elem.base, elem.line)
        if rid is not None:
            if elem.base is None:
                raise UnresolvableBaseError(
                    f"rdf:ID={rid!r} at line {elem.line} with no xml:base in scope"
                )
            return Iri(urljoin(elem.base, "#" + rid))
        if node_id is not None:
            return BlankNode(node_id)
        return self._fresh_bnode()

    def _node_element(self, elem: _Element) -> Subject:
        if elem.uri == RDF_NS and elem.local in ("li", "Seq", "Bag", "Alt", "List"):
            raise UnsupportedRdfConstructError(f"rdf:{elem.local}", elem.line)
        subject = self._subject_of(elem)
        if not (elem.uri == RDF_NS and elem.local == "Description"):
            self.graph.add(Triple(subject, RDF_TYPE, Iri(elem.name)))
        for (uri, local), value in elem.attrs.items():
            if uri in (RDF_NS, XML_NS) or (uri == "" and local.startswith("xmlns")):
                continue
            if uri == "":
                raise XmlSyntaxError(
                    f"attribute {local!r} without a namespace", elem.line, 0
                )
            self.graph.add(Triple(subject, Iri(uri + local), Literal(value, language=elem.lang)))
        for child in elem.children:
            self._property_element(subject, child)
        return subject

    # -- property elements -------------------------------------------------

    def _property_element(self, subject: Subject, elem: _Element) -> None:
        if elem.uri == RDF_NS and elem.local == "li":
            raise UnsupportedRdfConstructError("rdf:li", elem.line)
        if (RDF_NS, "parseType") in elem.attrs:
            kind = elem.attrs[(RDF_NS, "parseType")]
            raise UnsupportedRdfConstructError(f'rdf:parseType="{kind}"', elem.line)
        if (RDF_NS, "ID") in elem.attrs:
            raise UnsupportedRdfConstructError("rdf:ID reification on a property", elem.line)

        predicate = Iri(elem.name)
        resource = elem.attrs.get((RDF_NS, "resource"))
        node_id = elem.attrs.get((RDF_NS, "nodeID"))
        datatype = elem.attrs.get((RDF_NS, "datatype"))
        extra = [
            (uri, local)
            for (uri, local) in elem.attrs
            if uri not in (RDF_NS, XML_NS) and not (uri == "" and local.startswith("xmlns"))
        ]
        if extra:
            raise UnsupportedRdfConstructError(
                f"property attributes on a property element ({formatted(extra)})", elem.line
            )

        if resource is not None:
            self._require_empty(elem)
            obj = self._resolve(resource, elem.base, elem.line)
            self.graph.add(Triple(subject, predicate, obj))
            return
        if node_id is not None:
            self._require_empty(elem)
            self.graph.add(Triple(subject, predicate, BlankNode(node_id)))
            return
        if elem.children:
            if elem.content().strip():
                raise XmlSyntaxError(
                    "property element mixes text and nested elements", elem.line, 0
                )
            if len(elem.children) != 1:
                raise XmlSyntaxError(
                    "property element with more than one nested node", elem.line, 0
                )
            obj = self._node_element(elem.children[0])
            self.graph.add(Triple(subject, predicate, obj))
            return
        text = elem.content()
        if datatype is not None:
            self.graph.add(Triple(subject, predicate, Literal(text, datatype=Iri(datatype))))
        else:
            self.graph.add(Triple(subject, predicate, Literal(text, language=elem.lang)))

    @staticmethod
    def _require_empty(elem: _Element) -> None:
        if elem.children or elem.content().strip():
            raise XmlSyntaxError(
                "property element with rdf:resource/rdf:nodeID must be empty", elem.line, 0
            )


def formatted(names: list[tuple[str, str]]) -> str:
    return ", ".join(uri + local for uri, local in names)


def parse_rdf_xml(data: bytes) -> Graph:
    """Parse RDF/XML bytes into a graph.

    Blank nodes receive fresh ids ``b0, b1, ...`` in document order, so
    parsing is deterministic.
    """
    return _RdfXmlReader().read(data)
