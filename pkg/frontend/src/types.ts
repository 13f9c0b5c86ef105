/** Wire shapes of the term service's JSON endpoints. */

export interface SparqlTerm {
    type: "uri" | "literal" | "bnode";
    value: string;
    "xml:lang"?: string;
    datatype?: string;
}

export type SparqlBinding = Record<string, SparqlTerm>;

export interface SparqlResults {
    head: { vars: string[] };
    results: { bindings: SparqlBinding[] };
}

export interface TermRef {
    iri: string;
    label: string;
}

export type AxiomTerm =
    | { kind: "named"; target: TermRef }
    | { kind: "some"; property: TermRef; filler: TermRef };

export interface TermPage {
    iri: string;
    label: string;
    hierarchy_paths: TermRef[][];
    asserted_axioms: string[];
    axiom_terms: AxiomTerm[];
    used_by: { subject: string; label: string; axiom: string }[];
    xrefs: string[];
}

export interface OntologyStats {
    class_count: number;
    object_property_count: number;
    datatype_property_count: number;
    annotation_property_count: number;
}
