/** Pure HTML renderers; the DOM layer only assigns innerHTML and wires
 * click handlers to the emitted data-term attributes. The table shows
 * exactly the service's bindings: rendered row count equals the JSON
 * bindings length, with no client-side filtering.
 */

import type { SparqlBinding, SparqlResults, SparqlTerm, TermPage, TermRef } from "./types.js";
import { localIdOf } from "./state.js";

export function escapeHtml(text: string): string {
    return text
        .replaceAll("&", "&amp;")
        .replaceAll("<", "&lt;")
        .replaceAll(">", "&gt;")
        .replaceAll('"', "&quot;");
}

function termLink(iri: string, label?: string): string {
    const text = escapeHtml(label ?? iri);
    const local = localIdOf(iri);
    if (local === null) return `<span class="iri">${text}</span>`;
    return `<a href="#term/${local}" data-term="${local}">${text}</a>`;
}

function cell(term: SparqlTerm | undefined): string {
    if (term === undefined) return "<td></td>";
    if (term.type === "uri") return `<td>${termLink(term.value)}</td>`;
    if (term.type === "bnode") return `<td class="bnode">_:${escapeHtml(term.value)}</td>`;
    const lang = term["xml:lang"] ? `<span class="lang">@${escapeHtml(term["xml:lang"])}</span>` : "";
    return `<td>${escapeHtml(term.value)}${lang}</td>`;
}

export function renderResultTable(results: SparqlResults): string {
    const vars = results.head.vars;
    const bindings = results.results.bindings;
    if (bindings.length === 0) {
        return '<p class="empty">0 results</p>';
    }
    const head = vars.map((v) => `<th>${escapeHtml(v)}</th>`).join("");
    const rows = bindings
        .map(
            (binding: SparqlBinding) =>
                `<tr>${vars.map((v) => cell(binding[v])).join("")}</tr>`,
        )
        .join("\n");
    return (
        `<p class="count">${bindings.length} result${bindings.length === 1 ? "" : "s"}</p>` +
        `<table><thead><tr>${head}</tr></thead>\n<tbody>\n${rows}\n</tbody></table>`
    );
}

export function renderError(message: string): string {
    return `<div class="error"><strong>Query failed</strong><pre>${escapeHtml(message)}</pre></div>`;
}

function hierarchyTree(paths: TermRef[][]): string {
    if (paths.length === 0) return "<p class='empty'>no recorded ancestors</p>";
    const chains = paths
        .map((chain) => {
            const steps = chain.map((ref, depth) => {
                const pad = "&nbsp;".repeat(depth * 2);
                const marker = depth === 0 ? "" : "+ ";
                return `<div class="chain-step">${pad}${marker}${termLink(ref.iri, ref.label)}</div>`;
            });
            return `<div class="chain">${steps.join("")}</div>`;
        })
        .join("\n");
    return chains;
}

export function renderTermPage(page: TermPage): string {
    const axioms = page.axiom_terms
        .map((axiom) => {
            if (axiom.kind === "named") {
                return `<li>${termLink(axiom.target.iri, axiom.target.label)}</li>`;
            }
            return (
                `<li>${escapeHtml(axiom.property.label)} some ` +
                `${termLink(axiom.filler.iri, axiom.filler.label)}</li>`
            );
        })
        .join("\n");
    const usedBy = page.used_by
        .map(
            (use) =>
                `<li>${termLink(use.subject, use.label)} <span class="axiom">${escapeHtml(
                    use.axiom.split(" subClassOf: ")[1] ?? use.axiom,
                )}</span></li>`,
        )
        .join("\n");
    const xrefs = page.xrefs.map((x) => `<li>${escapeHtml(x)}</li>`).join("\n");
    return `
<article class="term">
  <h2 class="term-title">${escapeHtml(page.label)}</h2>
  <p class="term-iri">Term IRI: <code>${escapeHtml(page.iri)}</code></p>
  <section><h3>Class hierarchy</h3>${hierarchyTree(page.hierarchy_paths)}</section>
  <section><h3>Superclasses &amp; asserted axioms</h3>
    <ul class="axioms">${axioms || "<li class='empty'>none</li>"}</ul></section>
  <section><h3>Uses in this ontology</h3>
    <ul class="used-by">${usedBy || "<li class='empty'>none</li>"}</ul></section>
  <section><h3>Cross references</h3>
    <ul class="xrefs">${xrefs || "<li class='empty'>none</li>"}</ul></section>
</article>`;
}

export function renderNotFound(localId: string): string {
    return `
<div class="not-found">
  <h2>Term not found</h2>
  <p><code>${escapeHtml(localId)}</code> is not declared in this store.</p>
  <form class="term-search" data-role="term-search">
    <input name="term" placeholder="e.g. HINO_0022307" />
    <button type="submit">Open term</button>
  </form>
</div>`;
}
