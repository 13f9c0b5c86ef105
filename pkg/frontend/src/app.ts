/** DOM wiring: tabs, the query form, term navigation, hash routing. */

import { ServiceClient, ServiceError } from "./api.js";
import { renderError, renderNotFound, renderResultTable, renderTermPage } from "./render.js";
import { ConsoleState, DEFAULT_MAX_ROWS, withLimit } from "./state.js";

const PREFIX_SNIPPETS: Record<string, string> = {
    obo: "PREFIX obo: <http://purl.obolibrary.org/obo/>\n",
    rdfs: "PREFIX rdfs: <http://www.w3.org/2000/01/rdf-schema#>\n",
    owl: "PREFIX owl: <http://www.w3.org/2002/07/owl#>\n",
    rdf: "PREFIX rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#>\n",
};

const SAMPLE_QUERY = `select distinct ?s, ?l
from <http://purl.obolibrary.org/obo/merged/HINO>
where
{
  ?s rdfs:label ?l .
  ?s rdfs:subClassOf <http://purl.obolibrary.org/obo/INO_0000021>
}`;

function byId<T extends HTMLElement>(id: string): T {
    const element = document.getElementById(id);
    if (!element) throw new Error(`missing element #${id}`);
    return element as T;
}

export function startApp(): void {
    const client = new ServiceClient("");
    const state = new ConsoleState((localId) => client.term(localId));

    const queryInput = byId<HTMLTextAreaElement>("query-text");
    const maxRowsInput = byId<HTMLInputElement>("max-rows");
    const runButton = byId<HTMLButtonElement>("run-query");
    const resetButton = byId<HTMLButtonElement>("reset-query");
    const prefixSelect = byId<HTMLSelectElement>("prefix-select");
    const resultPanel = byId<HTMLDivElement>("result-panel");
    const termPanel = byId<HTMLDivElement>("term-panel");
    const backButton = byId<HTMLButtonElement>("term-back");
    const forwardButton = byId<HTMLButtonElement>("term-forward");
    const queryTab = byId<HTMLButtonElement>("tab-query");
    const termTab = byId<HTMLButtonElement>("tab-term");

    queryInput.value = SAMPLE_QUERY;
    maxRowsInput.value = String(DEFAULT_MAX_ROWS);

    function showTab(which: "query" | "term"): void {
        byId<HTMLElement>("query-view").hidden = which !== "query";
        byId<HTMLElement>("term-view").hidden = which !== "term";
        queryTab.classList.toggle("active", which === "query");
        termTab.classList.toggle("active", which === "term");
    }

    function wireTermLinks(root: HTMLElement): void {
        for (const anchor of root.querySelectorAll<HTMLAnchorElement>("a[data-term]")) {
            anchor.addEventListener("click", (event) => {
                event.preventDefault();
                void openTerm(anchor.dataset.term as string);
            });
        }
        const search = root.querySelector<HTMLFormElement>("form[data-role=term-search]");
        search?.addEventListener("submit", (event) => {
            event.preventDefault();
            const input = search.querySelector<HTMLInputElement>("input[name=term]");
            if (input && input.value.trim()) void openTerm(input.value.trim());
        });
    }

    async function openTerm(localId: string): Promise<void> {
        showTab("term");
        window.location.hash = `term/${localId}`;
        try {
            const page = await state.visitTerm(localId);
            termPanel.innerHTML = renderTermPage(page);
        } catch (error) {
            if (error instanceof ServiceError && error.status === 404) {
                termPanel.innerHTML = renderNotFound(localId);
            } else {
                termPanel.innerHTML = renderError(String(error));
            }
        }
        backButton.disabled = !state.canGoBack;
        forwardButton.disabled = !state.canGoForward;
        wireTermLinks(termPanel);
    }

    function showHistoryPage(): void {
        if (state.currentTerm) {
            termPanel.innerHTML = renderTermPage(state.currentTerm);
            wireTermLinks(termPanel);
        }
        backButton.disabled = !state.canGoBack;
        forwardButton.disabled = !state.canGoForward;
    }

    async function runQuery(): Promise<void> {
        const text = queryInput.value.trim();
        if (!text) {
            resultPanel.innerHTML = renderError("Enter a query first (nothing was sent).");
            return;
        }
        if (state.queryInFlight) return;
        state.queryInFlight = true;
        runButton.disabled = true;
        try {
            const maxRows = Number(maxRowsInput.value) || DEFAULT_MAX_ROWS;
            const results = await client.runQuery(withLimit(text, maxRows));
            state.lastResult = results;
            resultPanel.innerHTML = renderResultTable(results);
            wireTermLinks(resultPanel);
        } catch (error) {
            resultPanel.innerHTML = renderError(
                error instanceof ServiceError ? error.message : String(error),
            );
        } finally {
            state.queryInFlight = false;
            runButton.disabled = false;
        }
    }

    runButton.addEventListener("click", () => void runQuery());
    resetButton.addEventListener("click", () => {
        queryInput.value = "";
        resultPanel.innerHTML = "";
    });
    prefixSelect.addEventListener("change", () => {
        const snippet = PREFIX_SNIPPETS[prefixSelect.value];
        if (snippet && !queryInput.value.includes(snippet.trim())) {
            queryInput.value = snippet + queryInput.value;
        }
        prefixSelect.value = "";
    });
    backButton.addEventListener("click", () => {
        state.back();
        showHistoryPage();
    });
    forwardButton.addEventListener("click", () => {
        state.forward();
        showHistoryPage();
    });
    queryTab.addEventListener("click", () => showTab("query"));
    termTab.addEventListener("click", () => showTab("term"));

    void client
        .stats()
        .then((stats) => {
            byId<HTMLElement>("stats-line").textContent =
                `${stats.class_count} classes · ${stats.object_property_count} object properties · ` +
                `${stats.datatype_property_count} datatype properties · ` +
                `${stats.annotation_property_count} annotation properties`;
        })
        .catch(() => {
            byId<HTMLElement>("stats-line").textContent = "service unreachable";
        });

    wireTermLinks(termPanel);
    const hash = window.location.hash;
    if (hash.startsWith("#term/")) {
        void openTerm(hash.slice("#term/".length));
    } else {
        showTab("query");
    }
}

startApp();
