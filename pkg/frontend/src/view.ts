import { CATEGORIES, PAGE_SIZE, RANK_MODES, type UiState } from "./state.js";
import type {
  CategoryName,
  DomainEntry,
  RankMode,
  SearchResponse,
  StatsResponse,
} from "./types.js";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export interface Handlers {
  onQuerySubmit(query: string): void;
  onDomainClick(domain: string | null): void;
  onCategoryClick(category: CategoryName | null): void;
  onRankChange(rank: RankMode): void;
  onPageChange(page: number): void;
  onRetryDomains(): void;
}

/** Build the static page skeleton once; later renders fill the slots. */
export function buildLayout(root: HTMLElement, handlers: Handlers): void {
  root.textContent = "";

  const banner = el("div", "banner hidden");
  banner.id = "banner";
  banner.setAttribute("role", "alert");

  const form = el("form", "search-form");
  form.id = "search-form";
  const input = el("input");
  input.id = "query-input";
  input.type = "search";
  input.placeholder = "Search future works...";
  const button = el("button", "", "Search");
  button.type = "submit";
  const rankSelect = el("select");
  rankSelect.id = "rank-select";
  for (const mode of RANK_MODES) {
    const option = el("option", "", mode);
    option.value = mode;
    rankSelect.appendChild(option);
  }
  form.append(input, button, rankSelect);
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    handlers.onQuerySubmit(input.value);
  });
  rankSelect.addEventListener("change", () => {
    handlers.onRankChange(rankSelect.value as RankMode);
  });

  const tabs = el("nav", "category-tabs");
  tabs.id = "category-tabs";
  for (const category of [null, ...CATEGORIES] as (CategoryName | null)[]) {
    const tab = el("button", "tab", category ?? "All");
    tab.type = "button";
    tab.dataset.category = category ?? "";
    tab.addEventListener("click", () => handlers.onCategoryClick(category));
    tabs.appendChild(tab);
  }

  const sidebar = el("aside", "domain-sidebar");
  sidebar.id = "domain-sidebar";

  const results = el("section", "results");
  results.id = "results";

  const paging = el("div", "paging");
  paging.id = "paging";
  const prev = el("button", "", "Previous");
  prev.id = "page-prev";
  prev.type = "button";
  const info = el("span", "page-info");
  info.id = "page-info";
  const next = el("button", "", "Next");
  next.id = "page-next";
  next.type = "button";
  prev.addEventListener("click", () => handlers.onPageChange(-1));
  next.addEventListener("click", () => handlers.onPageChange(+1));
  paging.append(prev, info, next);

  const stats = el("section", "stats-panel");
  stats.id = "stats-panel";

  const main = el("main", "content");
  main.append(tabs, results, paging, stats);
  root.append(banner, form, el("div", "columns"));
  const columns = root.querySelector(".columns") as HTMLElement;
  columns.append(sidebar, main);
  setupRetrySlot(sidebar, handlers);
}

function setupRetrySlot(sidebar: HTMLElement, handlers: Handlers): void {
  // one delegated listener covers domain entries and the retry affordance,
  // both of which are re-rendered dynamically
  sidebar.addEventListener("click", (event) => {
    const target = event.target as HTMLElement;
    if (target.id === "domain-retry") {
      handlers.onRetryDomains();
      return;
    }
    const domain = target.closest<HTMLElement>(".domain");
    if (domain) handlers.onDomainClick(domain.dataset.domain || null);
  });
}

export function showBanner(message: string): void {
  const banner = document.getElementById("banner");
  if (!banner) return;
  banner.textContent = message;
  banner.classList.remove("hidden");
}

export function clearBanner(): void {
  const banner = document.getElementById("banner");
  if (!banner) return;
  banner.textContent = "";
  banner.classList.add("hidden");
}

export function reflectState(state: UiState): void {
  const input = document.getElementById("query-input") as HTMLInputElement | null;
  if (input) input.value = state.query;
  const rank = document.getElementById("rank-select") as HTMLSelectElement | null;
  if (rank) rank.value = state.rank;
  for (const tab of document.querySelectorAll<HTMLButtonElement>("#category-tabs .tab")) {
    tab.classList.toggle("active", (tab.dataset.category || null) === state.category);
  }
  for (const item of document.querySelectorAll<HTMLElement>("#domain-sidebar .domain")) {
    item.classList.toggle("active", (item.dataset.domain || null) === state.domain);
  }
}

export function renderResults(payload: SearchResponse, state: UiState): void {
  const container = document.getElementById("results");
  if (!container) return;
  container.textContent = "";
  if (payload.results.length === 0) {
    container.appendChild(el("p", "empty", "no future works found"));
  }
  for (const row of payload.results) {
    const card = el("article", "result");
    const head = el("div", "result-head");
    head.append(
      el("span", `badge badge-${row.category}`, row.category),
      el("span", "confidence", `confidence ${row.confidence.toFixed(2)}`),
      el("span", "score", `${state.rank} ${formatScore(row.score, state.rank)}`),
    );
    const paper = el(
      "div",
      "paper",
      `${row.paper.title} (${row.paper.venue} ${row.paper.year}, ${row.paper.citation_count} citations)`,
    );
    card.append(head, el("p", "sentence", row.sentence), paper);
    container.appendChild(card);
  }

  const info = document.getElementById("page-info");
  if (info) {
    const first = payload.total === 0 ? 0 : state.page * PAGE_SIZE + 1;
    const last = state.page * PAGE_SIZE + payload.results.length;
    info.textContent = `${first}-${last} of ${payload.total}`;
  }
  const prev = document.getElementById("page-prev") as HTMLButtonElement | null;
  if (prev) prev.disabled = state.page === 0;
  const next = document.getElementById("page-next") as HTMLButtonElement | null;
  if (next) next.disabled = (state.page + 1) * PAGE_SIZE >= payload.total;
}

function formatScore(score: number, rank: string): string {
  return rank === "pagerank" ? score.toFixed(4) : String(score);
}

export function renderDomains(domains: DomainEntry[], state: UiState): void {
  const sidebar = document.getElementById("domain-sidebar");
  if (!sidebar) return;
  sidebar.textContent = "";
  if (domains.length === 0) {
    sidebar.classList.add("hidden");
    return;
  }
  sidebar.classList.remove("hidden");
  sidebar.appendChild(el("h2", "", "Domains"));
  const all = el("button", "domain", "All domains");
  all.type = "button";
  all.dataset.domain = "";
  sidebar.appendChild(all);
  for (const domain of domains) {
    const item = el(
      "button",
      "domain",
      `${domain.name} (${domain.paper_count} papers, ${domain.sentence_count} sentences)`,
    );
    item.type = "button";
    item.dataset.domain = domain.name;
    sidebar.appendChild(item);
  }
  reflectState(state);
}

export function renderDomainsError(): void {
  const sidebar = document.getElementById("domain-sidebar");
  if (!sidebar) return;
  sidebar.textContent = "";
  sidebar.classList.remove("hidden");
  sidebar.appendChild(el("p", "", "could not load domains"));
  const retry = el("button", "", "Retry");
  retry.id = "domain-retry";
  retry.type = "button";
  sidebar.appendChild(retry);
}

export function renderStats(stats: StatsResponse): void {
  const panel = document.getElementById("stats-panel");
  if (!panel) return;
  panel.textContent = "";
  panel.classList.remove("hidden");
  panel.appendChild(el("h2", "", "Corpus statistics"));

  for (const row of stats.domains) {
    const block = el("div", "stats-domain");
    block.appendChild(
      el(
        "h3",
        "",
        `${row.domain}: ${row.sentence_count} sentences / ${row.paper_count} papers ` +
          `(avg ${row.avg_sentences_per_paper.toFixed(2)})`,
      ),
    );
    const bars = el("div", "category-bars");
    for (const [category, percent] of Object.entries(row.category_percentages)) {
      const bar = el("div", "bar-row");
      const fill = el("span", `bar-fill badge-${category}`);
      fill.style.width = `${Math.max(percent, 0)}%`;
      bar.append(el("span", "bar-label", `${category} ${percent.toFixed(1)}%`), fill);
      bars.appendChild(bar);
    }
    block.appendChild(bars);

    const phrases = stats.top_phrases[row.domain] ?? [];
    if (phrases.length > 0) {
      const list = el("ol", "phrase-list");
      for (const entry of phrases) {
        list.appendChild(el("li", "", `${entry.phrase} (${entry.count})`));
      }
      block.append(el("h4", "", "top phrases"), list);
    }
    panel.appendChild(block);
  }
}

export function hideStatsPanel(): void {
  const panel = document.getElementById("stats-panel");
  if (!panel) return;
  panel.textContent = "";
  panel.appendChild(el("p", "notice", "statistics unavailable"));
}
