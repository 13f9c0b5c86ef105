/** Thin client over the three endpoints the console consumes. */

import type { OntologyStats, SparqlResults, TermPage } from "./types.js";

export class ServiceError extends Error {
    constructor(message: string, readonly status: number) {
        super(message);
        this.name = "ServiceError";
    }
}

async function failureOf(response: Response): Promise<ServiceError> {
    let message = `${response.status} ${response.statusText}`;
    try {
        const payload = await response.json();
        if (payload && typeof payload.error === "string") message = payload.error;
    } catch {
        // non-JSON error body; keep the status line
    }
    return new ServiceError(message, response.status);
}

export class ServiceClient {
    constructor(readonly baseUrl: string = "") {}

    async runQuery(query: string): Promise<SparqlResults> {
        const response = await fetch(`${this.baseUrl}/sparql`, {
            method: "POST",
            headers: {
                "content-type": "application/sparql-query",
                accept: "application/sparql-results+json",
            },
            body: query,
        });
        if (!response.ok) throw await failureOf(response);
        return (await response.json()) as SparqlResults;
    }

    async term(localId: string): Promise<TermPage> {
        const response = await fetch(`${this.baseUrl}/term/${encodeURIComponent(localId)}`, {
            headers: { accept: "application/json" },
        });
        if (!response.ok) throw await failureOf(response);
        return (await response.json()) as TermPage;
    }

    async stats(): Promise<OntologyStats> {
        const response = await fetch(`${this.baseUrl}/stats`, {
            headers: { accept: "application/json" },
        });
        if (!response.ok) throw await failureOf(response);
        return (await response.json()) as OntologyStats;
    }
}
