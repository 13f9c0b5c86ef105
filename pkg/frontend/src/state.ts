/** Client-side console state: query text, results, term cache, history.
 *
 * Term pages are cached by local id; moving through history never
 * re-issues a network request for a page already seen.
 */

import type { SparqlResults, TermPage } from "./types.js";

export const DEFAULT_MAX_ROWS = 50;

const LIMIT_RE = /\blimit\s+\d+\b/i;

/** Append a LIMIT from the max-rows control unless the query has one. */
export function withLimit(query: string, maxRows: number): string {
    if (LIMIT_RE.test(query)) return query;
    return `${query.trimEnd()}\nLIMIT ${maxRows}`;
}

/** Local id (e.g. HINO_0022307) of a term IRI, or null for non-term IRIs. */
export function localIdOf(iri: string): string | null {
    const tail = iri.split(/[/#]/).pop() ?? "";
    return /^[A-Za-z][A-Za-z0-9]*_[A-Za-z0-9]+$/.test(tail) ? tail : null;
}

export type TermFetcher = (localId: string) => Promise<TermPage>;

export class ConsoleState {
    queryText = "";
    maxRows: number = DEFAULT_MAX_ROWS;
    lastResult: SparqlResults | null = null;
    queryInFlight = false;

    currentTerm: TermPage | null = null;
    private readonly cache = new Map<string, TermPage>();
    private readonly history: string[] = [];
    private cursor = -1;

    constructor(private readonly fetchTerm: TermFetcher) {}

    get currentTermId(): string | null {
        return this.cursor >= 0 ? this.history[this.cursor] : null;
    }

    get canGoBack(): boolean {
        return this.cursor > 0;
    }

    get canGoForward(): boolean {
        return this.cursor >= 0 && this.cursor < this.history.length - 1;
    }

    cached(localId: string): TermPage | undefined {
        return this.cache.get(localId);
    }

    /** Open a term page, from cache when possible, and push history. */
    async visitTerm(localId: string): Promise<TermPage> {
        const page = this.cache.get(localId) ?? (await this.fetchTerm(localId));
        this.cache.set(localId, page);
        if (this.currentTermId !== localId) {
            this.history.splice(this.cursor + 1);
            this.history.push(localId);
            this.cursor = this.history.length - 1;
        }
        this.currentTerm = page;
        return page;
    }

    /** History moves resolve from the cache only: no network. */
    back(): TermPage | null {
        if (!this.canGoBack) return null;
        this.cursor -= 1;
        this.currentTerm = this.cache.get(this.history[this.cursor]) ?? null;
        return this.currentTerm;
    }

    forward(): TermPage | null {
        if (!this.canGoForward) return null;
        this.cursor += 1;
        this.currentTerm = this.cache.get(this.history[this.cursor]) ?? null;
        return this.currentTerm;
    }
}
