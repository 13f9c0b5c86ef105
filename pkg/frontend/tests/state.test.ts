import { describe, expect, it, vi } from "vitest";

import { ConsoleState, localIdOf, withLimit } from "../src/state.js";
import type { TermPage } from "../src/types.js";

function page(id: string): TermPage {
    return {
        iri: `http://purl.obolibrary.org/obo/${id}`,
        label: `label of ${id}`,
        hierarchy_paths: [],
        asserted_axioms: [],
        axiom_terms: [],
        used_by: [],
        xrefs: [],
    };
}

describe("withLimit", () => {
    it("appends a LIMIT derived from the max-rows control", () => {
        expect(withLimit("SELECT ?s WHERE { ?s a ?c }", 50)).toMatch(/LIMIT 50$/);
    });

    it("keeps an explicit LIMIT untouched", () => {
        const query = "SELECT ?s WHERE { ?s a ?c } LIMIT 7";
        expect(withLimit(query, 50)).toBe(query);
    });

    it("is case-insensitive about the existing keyword", () => {
        const query = "SELECT ?s WHERE { ?s a ?c } limit 3";
        expect(withLimit(query, 50)).toBe(query);
    });
});

describe("localIdOf", () => {
    it("extracts OBO-style local ids", () => {
        expect(localIdOf("http://purl.obolibrary.org/obo/HINO_0022307")).toBe("HINO_0022307");
        expect(localIdOf("http://purl.obolibrary.org/obo/NCBITaxon_9606")).toBe("NCBITaxon_9606");
    });

    it("returns null for non-term IRIs", () => {
        expect(localIdOf("http://www.w3.org/2000/01/rdf-schema#label")).toBeNull();
        expect(localIdOf("http://example.org/plain")).toBeNull();
    });
});

describe("ConsoleState term history", () => {
    it("fetches a page once and serves revisits from the cache", async () => {
        const fetcher = vi.fn(async (id: string) => page(id));
        const state = new ConsoleState(fetcher);
        await state.visitTerm("HINO_0000001");
        await state.visitTerm("HINO_0000002");
        await state.visitTerm("HINO_0000001");
        expect(fetcher).toHaveBeenCalledTimes(2);
    });

    it("never issues a request when navigating history", async () => {
        const fetcher = vi.fn(async (id: string) => page(id));
        const state = new ConsoleState(fetcher);
        await state.visitTerm("HINO_0000001");
        await state.visitTerm("HINO_0000002");
        fetcher.mockClear();

        const back = state.back();
        expect(back?.label).toBe("label of HINO_0000001");
        const forward = state.forward();
        expect(forward?.label).toBe("label of HINO_0000002");
        expect(fetcher).not.toHaveBeenCalled();
    });

    it("truncates the forward branch on a new visit", async () => {
        const state = new ConsoleState(async (id) => page(id));
        await state.visitTerm("HINO_0000001");
        await state.visitTerm("HINO_0000002");
        state.back();
        await state.visitTerm("HINO_0000003");
        expect(state.canGoForward).toBe(false);
        expect(state.back()?.label).toBe("label of HINO_0000001");
    });

    it("exposes flags for the navigation buttons", async () => {
        const state = new ConsoleState(async (id) => page(id));
        expect(state.canGoBack).toBe(false);
        expect(state.canGoForward).toBe(false);
        await state.visitTerm("HINO_0000001");
        expect(state.canGoBack).toBe(false);
        await state.visitTerm("HINO_0000002");
        expect(state.canGoBack).toBe(true);
    });
});
