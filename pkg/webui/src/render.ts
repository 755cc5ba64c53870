// Pure view functions: ViewState in, HTML strings out. Everything user-
// or server-provided passes through escapeHtml; the sources pane renders
// only what the API payload contains.

import type { ApiAnswer, SourceRef, ViewState } from "./types.js";
import { EU_LANGUAGES } from "./types.js";

export function escapeHtml(raw: string): string {
  return raw
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;")
    .replace(/'/g, "&#39;");
}

function labelize(token: string): string {
  return token.replace(/_/g, " ");
}

function checkboxList(
  name: "whom" | "about",
  options: string[],
  selected: string[],
): string {
  const boxes = options
    .map((opt) => {
      const checked = selected.includes(opt) ? " checked" : "";
      return (
        `<label class="option"><input type="checkbox" data-filter="${name}" ` +
        `value="${escapeHtml(opt)}"${checked}> ${escapeHtml(labelize(opt))}</label>`
      );
    })
    .join("");
  const summary = selected.length
    ? selected.map(labelize).map(escapeHtml).join(", ")
    : "All";
  return (
    `<details class="dropdown" data-dropdown="${name}">` +
    `<summary>${name === "whom" ? "Whom" : "About"}: <span class="selection">${summary}</span></summary>` +
    `<div class="options">${boxes}</div></details>`
  );
}

/** The "Whom"/"About" dropdowns plus the answer-language selector.
 * Vocabularies come exclusively from GET /api/filters. */
export function renderFilterControls(state: ViewState): string {
  if (state.filtersError) {
    return (
      `<div class="filters filters-disabled" data-testid="filters-disabled">` +
      `<span class="notice">Filters are unavailable right now; free-text questions still work.</span>` +
      `</div>`
    );
  }
  if (!state.filters) {
    return `<div class="filters" data-testid="filters-loading">Loading filters…</div>`;
  }
  const whom = checkboxList("whom", state.filters.whom, state.whom);
  // an empty topic vocabulary hides the About control entirely
  const about = state.filters.about.length
    ? checkboxList("about", state.filters.about, state.about)
    : "";
  const languages = ["auto", ...EU_LANGUAGES]
    .map((code) => {
      const chosen = code === state.language ? " selected" : "";
      const label = code === "auto" ? "Answer language: auto" : code;
      return `<option value="${code}"${chosen}>${label}</option>`;
    })
    .join("");
  return (
    `<div class="filters" data-testid="filters">` +
    whom +
    about +
    `<select class="language" data-testid="language">${languages}</select>` +
    `</div>`
  );
}

function renderScopeEcho(state: ViewState): string {
  if (!state.scope) return "";
  const whom = state.scope.whom.length
    ? state.scope.whom.map(labelize).map(escapeHtml).join(", ")
    : "all groups";
  const about = state.scope.about.length
    ? state.scope.about.map(escapeHtml).join(", ")
    : "all topics";
  return (
    `<p class="scope-echo" data-testid="scope-echo">` +
    `Asked across <strong>${whom}</strong> · <strong>${about}</strong></p>`
  );
}

function renderSection(title: string, body: string, testId: string): string {
  return (
    `<details class="answer-section" data-testid="${testId}" open>` +
    `<summary>${title}</summary><div class="section-body">${body}</div></details>`
  );
}

function renderAnswerSections(answer: ApiAnswer): string {
  const overview = `<p>${escapeHtml(answer.overview)}</p>`;
  const groups = Object.entries(answer.group_insights)
    .map(([group, bullets]) => {
      const items = bullets.map((b) => `<li>${escapeHtml(b)}</li>`).join("");
      return (
        `<div class="group-cluster" data-group="${escapeHtml(group)}">` +
        `<h4>${escapeHtml(labelize(group))}</h4><ul>${items}</ul></div>`
      );
    })
    .join("");
  const recommendations =
    `<ol class="recommendations">` +
    answer.recommendations.map((r) => `<li>${escapeHtml(r)}</li>`).join("") +
    `</ol>`;
  const localization = answer.localization_failed
    ? `<p class="notice" data-testid="localization-notice">The answer could not be translated into the requested language and is shown untranslated.</p>`
    : "";
  return (
    localization +
    renderSection("Overview", overview, "section-overview") +
    renderSection("Categorized insights", groups, "section-insights") +
    renderSection("Actionable insights", recommendations, "section-actions")
  );
}

export function renderAnswerPane(state: ViewState): string {
  switch (state.status) {
    case "idle":
      return (
        `<div class="placeholder" data-testid="state-idle">` +
        `Ask a question about the collected feedback to get started.</div>`
      );
    case "pending":
      return (
        `<div class="placeholder pending" data-testid="state-pending">` +
        `<span class="spinner"></span> Searching feedback and composing an answer…</div>`
      );
    case "error": {
      const err = state.error;
      return (
        `<div class="banner error" role="alert" data-testid="state-error">` +
        `<strong>Something went wrong.</strong> ${escapeHtml(err?.message ?? "")} ` +
        `<span class="request-id">Request id: ${escapeHtml(err?.requestId ?? "unknown")}</span></div>`
      );
    }
    case "refused":
      return (
        renderScopeEcho(state) +
        `<div class="banner refusal" data-testid="state-refused">` +
        `<strong>No grounded answer available.</strong> ` +
        `The retrieved feedback does not contain enough relevant material to answer this question. ` +
        `Try broadening the filters or rephrasing.</div>`
      );
    case "answered": {
      if (!state.answer) return "";
      return (
        renderScopeEcho(state) +
        `<div data-testid="state-answered">${renderAnswerSections(state.answer)}</div>`
      );
    }
  }
}

function renderSource(source: SourceRef): string {
  const org = source.organization_name
    ? `<span class="org">${escapeHtml(source.organization_name)}</span> · `
    : "";
  return (
    `<li class="source" data-record-id="${escapeHtml(source.record_id)}">` +
    `<div class="source-meta">` +
    `<span class="group">${escapeHtml(labelize(source.stakeholder_group))}</span> · ` +
    org +
    `<span class="country">${escapeHtml(source.country)}</span> · ` +
    `<span class="lang-tag">${escapeHtml(source.language)}</span>` +
    `</div>` +
    `<blockquote>${escapeHtml(source.excerpt)}</blockquote>` +
    `<div class="initiative">${escapeHtml(source.initiative_title)}</div></li>`
  );
}

export function renderSourcesPane(state: ViewState): string {
  if (state.status !== "answered" || !state.answer) {
    return `<div class="sources-empty" data-testid="sources-empty"></div>`;
  }
  const items = state.answer.sources.map(renderSource).join("");
  const stats = state.answer.retrieval_stats;
  return (
    `<div data-testid="sources">` +
    `<h3>Sources</h3>` +
    `<p class="stats" data-testid="retrieval-stats">` +
    `${stats.candidates} records → ${stats.after_filter} matched filters → ` +
    `${stats.after_rerank} selected</p>` +
    `<ul class="source-list">${items}</ul></div>`
  );
}

export function renderApp(state: ViewState): string {
  return (
    `<div class="columns">` +
    `<section class="answer-pane" data-testid="answer-pane">${renderAnswerPane(state)}</section>` +
    `<aside class="sources-pane" data-testid="sources-pane">${renderSourcesPane(state)}</aside>` +
    `</div>`
  );
}
