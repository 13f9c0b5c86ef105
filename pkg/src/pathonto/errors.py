"""Exception hierarchy shared by all pipeline stages."""


class PathontoError(Exception):
    """Base class for every error raised by this package."""


# --- RDF substrate ---------------------------------------------------------

class XmlSyntaxError(PathontoError):
    """Input is not well-formed XML."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        loc = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{message}{loc}")
        self.line = line
        self.column = column


class UnsupportedRdfConstructError(PathontoError):
    """RDF/XML construct outside the supported exporter profile."""

    def __init__(self, construct: str, line: int | None = None):
        loc = f" at line {line}" if line is not None else ""
        super().__init__(f"unsupported RDF/XML construct {construct!r}{loc}")
        self.construct = construct
        self.line = line


class UnresolvableBaseError(PathontoError):
    """Relative reference (e.g. rdf:ID) with no xml:base in scope."""


class TurtleSyntaxError(PathontoError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class UndefinedPrefixError(PathontoError):
    def __init__(self, prefix: str, line: int | None = None, column: int | None = None):
        loc = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"undefined prefix {prefix!r}{loc}")
        self.prefix = prefix


class FrozenGraphError(PathontoError):
    """Mutation attempted on a sealed graph."""


# --- BioPAX reader ---------------------------------------------------------

class DanglingReferenceError(PathontoError):
    """A resource is referenced but never declared in the same document."""

    def __init__(self, subject: str, predicate: str, target: str):
        super().__init__(
            f"dangling reference: <{subject}> <{predicate}> points at undeclared <{target}>"
        )
        self.subject = subject
        self.predicate = predicate
        self.target = target


# --- class mapper ----------------------------------------------------------

class CounterOverflowError(PathontoError):
    """Identifier counter exceeded the 7-digit space."""


class NonNumericPmidError(PathontoError):
    def __init__(self, accession: str):
        super().__init__(f"publication accession is not a numeric PMID: {accession!r}")
        self.accession = accession


class RegistryConflictError(PathontoError):
    """Two registries (or registry file rows) disagree about a key or an id."""


# --- term importer ---------------------------------------------------------

class SeedNotFoundError(PathontoError):
    def __init__(self, missing: list[str]):
        super().__init__("seed terms not found in source: " + ", ".join(missing))
        self.missing = missing


class TopUnreachableError(PathontoError):
    def __init__(self, seed: str, top: str):
        super().__init__(f"seed <{seed}> has no subClassOf path to top <{top}>")
        self.seed = seed
        self.top = top


class CycleDetectedError(PathontoError):
    def __init__(self, cycle: list[str]):
        super().__init__("subClassOf cycle: " + " -> ".join(cycle))
        self.cycle = cycle


# --- SPARQL engine ---------------------------------------------------------

class QuerySyntaxError(PathontoError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class UnsupportedFeatureError(PathontoError):
    def __init__(self, feature: str):
        super().__init__(f"unsupported SPARQL feature: {feature}")
        self.feature = feature


class FromGraphMismatchError(PathontoError):
    def __init__(self, requested: str, registered: str):
        super().__init__(
            f"FROM graph <{requested}> does not match the store graph <{registered}>"
        )
        self.requested = requested
        self.registered = registered


# --- term pages ------------------------------------------------------------

class TermNotFoundError(PathontoError):
    def __init__(self, iri: str):
        super().__init__(f"term not declared in the store: <{iri}>")
        self.iri = iri
