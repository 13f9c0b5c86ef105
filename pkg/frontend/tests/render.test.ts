import { describe, expect, it } from "vitest";

import {
    escapeHtml,
    renderError,
    renderNotFound,
    renderResultTable,
    renderTermPage,
} from "../src/render.js";
import type { SparqlResults, TermPage } from "../src/types.js";

const RESULTS: SparqlResults = {
    head: { vars: ["s", "l"] },
    results: {
        bindings: [
            {
                s: { type: "uri", value: "http://purl.obolibrary.org/obo/HINO_0026258" },
                l: { type: "literal", value: "Signaling by NODAL" },
            },
            {
                s: { type: "uri", value: "http://purl.obolibrary.org/obo/HINO_0026233" },
                l: { type: "literal", value: "TCR signaling" },
            },
        ],
    },
};

function countRows(html: string): number {
    return (html.match(/<tr>/g) ?? []).length - 1; // minus the header row
}

describe("renderResultTable", () => {
    it("renders exactly one row per binding", () => {
        const html = renderResultTable(RESULTS);
        expect(countRows(html)).toBe(RESULTS.results.bindings.length);
    });

    it("renders every cell value verbatim", () => {
        const html = renderResultTable(RESULTS);
        for (const binding of RESULTS.results.bindings) {
            expect(html).toContain(binding.s.value);
            expect(html).toContain(binding.l.value);
        }
    });

    it("turns term IRIs into term-browser links", () => {
        const html = renderResultTable(RESULTS);
        expect(html).toContain('data-term="HINO_0026258"');
        expect(html).toContain('href="#term/HINO_0026233"');
    });

    it("shows a 0-results state instead of an empty table", () => {
        const html = renderResultTable({ head: { vars: ["s"] }, results: { bindings: [] } });
        expect(html).toContain("0 results");
        expect(html).not.toContain("<table>");
    });

    it("escapes literal cell content", () => {
        const html = renderResultTable({
            head: { vars: ["l"] },
            results: { bindings: [{ l: { type: "literal", value: "<script>alert(1)</script>" } }] },
        });
        expect(html).not.toContain("<script>");
        expect(html).toContain("&lt;script&gt;");
    });
});

describe("renderTermPage", () => {
    const page: TermPage = {
        iri: "http://purl.obolibrary.org/obo/HINO_0022307",
        label: "Toll Like Receptor 4 (TLR4) Cascade",
        hierarchy_paths: [
            [
                { iri: "http://purl.obolibrary.org/obo/BFO_0000001", label: "entity" },
                { iri: "http://purl.obolibrary.org/obo/HINO_0022307", label: "Toll Like Receptor 4 (TLR4) Cascade" },
            ],
        ],
        asserted_axioms: ["human_molecular_pathway", "has_part some Activated TLR4 signalling"],
        axiom_terms: [
            {
                kind: "named",
                target: { iri: "http://purl.obolibrary.org/obo/INO_0000021", label: "human_molecular_pathway" },
            },
            {
                kind: "some",
                property: { iri: "http://purl.obolibrary.org/obo/BFO_0000051", label: "has_part" },
                filler: { iri: "http://purl.obolibrary.org/obo/HINO_0000007", label: "Activated TLR4 signalling" },
            },
        ],
        used_by: [
            {
                subject: "http://purl.obolibrary.org/obo/HINO_0022300",
                label: "Toll Receptor Cascades",
                axiom: "Toll Receptor Cascades subClassOf: has_part some Toll Like Receptor 4 (TLR4) Cascade",
            },
        ],
        xrefs: ["http://www.reactome.org/biopax/48887#Pathway1"],
    };

    it("title equals the term's label", () => {
        const html = renderTermPage(page);
        expect(html).toContain('<h2 class="term-title">Toll Like Receptor 4 (TLR4) Cascade</h2>');
        expect(html).toContain(page.iri);
    });

    it("axiom fillers and used-by subjects are clickable terms", () => {
        const html = renderTermPage(page);
        expect(html).toContain('data-term="HINO_0000007"');
        expect(html).toContain('data-term="HINO_0022300"');
        expect(html).toContain("has_part some");
    });

    it("renders the hierarchy chain in order", () => {
        const html = renderTermPage(page);
        const entityAt = html.indexOf(">entity<");
        const termAt = html.lastIndexOf("Toll Like Receptor 4");
        expect(entityAt).toBeGreaterThan(-1);
        expect(entityAt).toBeLessThan(termAt);
    });
});

describe("error and not-found states", () => {
    it("shows service messages verbatim but escaped", () => {
        const html = renderError('unsupported SPARQL feature: OPTIONAL <here>');
        expect(html).toContain("unsupported SPARQL feature: OPTIONAL");
        expect(html).toContain("&lt;here&gt;");
    });

    it("not-found page carries a search box", () => {
        const html = renderNotFound("HINO_9999999");
        expect(html).toContain("HINO_9999999");
        expect(html).toContain("term-search");
        expect(html).toContain("<input");
    });
});

describe("escapeHtml", () => {
    it("escapes the four significant characters", () => {
        expect(escapeHtml('<a href="x">&</a>')).toBe(
            "&lt;a href=&quot;x&quot;&gt;&amp;&lt;/a&gt;",
        );
    });
});
