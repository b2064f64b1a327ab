import { ApiClient, isAbort } from "./api.js";
import {
  defaultState,
  stateFromQuery,
  stateToQuery,
  type UiState,
} from "./state.js";
import type { CategoryName, RankMode } from "./types.js";
import {
  buildLayout,
  clearBanner,
  hideStatsPanel,
  reflectState,
  renderDomains,
  renderDomainsError,
  renderResults,
  renderStats,
  showBanner,
} from "./view.js";

/** Wires state, API and view together.  The URL query string is the single
 * source of truth: every interaction updates it via pushState and back and
 * forward navigation restores it exactly. */
export class App {
  state: UiState = defaultState();

  private readonly api: ApiClient;
  private readonly win: Window;
  private readonly onPopState: () => void;
  private searchEpoch = 0;

  constructor(root: HTMLElement, api: ApiClient, win: Window = window) {
    this.api = api;
    this.win = win;
    buildLayout(root, {
      onQuerySubmit: (query) => this.update({ query, page: 0 }),
      onDomainClick: (domain) => this.update({ domain, page: 0 }),
      onCategoryClick: (category) => this.update({ category, page: 0 }),
      onRankChange: (rank) => this.update({ rank, page: 0 }),
      onPageChange: (delta) => this.update({ page: Math.max(0, this.state.page + delta) }),
      onRetryDomains: () => void this.loadDomains(),
    });
    this.onPopState = () => {
      this.state = stateFromQuery(this.win.location.search);
      reflectState(this.state);
      void this.runSearch();
    };
    win.addEventListener("popstate", this.onPopState);
  }

  destroy(): void {
    this.win.removeEventListener("popstate", this.onPopState);
  }

  async init(): Promise<void> {
    this.state = stateFromQuery(this.win.location.search);
    reflectState(this.state);
    await Promise.all([this.loadDomains(), this.loadStats(), this.runSearch()]);
  }

  /** Apply a state patch, reflect it into the URL, and re-query. */
  update(patch: Partial<UiState>): void {
    this.state = { ...this.state, ...patch };
    const url = this.win.location.pathname + stateToQuery(this.state);
    this.win.history.pushState(null, "", url);
    reflectState(this.state);
    void this.runSearch();
  }

  async runSearch(): Promise<void> {
    const epoch = ++this.searchEpoch;
    const requested = this.state;
    try {
      const payload = await this.api.search(requested);
      if (epoch !== this.searchEpoch) return; // a newer search superseded this one
      clearBanner();
      renderResults(payload, requested);
    } catch (err) {
      if (isAbort(err) || epoch !== this.searchEpoch) return;
      showBanner(err instanceof Error ? err.message : "search failed");
    }
  }

  async loadDomains(): Promise<void> {
    try {
      renderDomains(await this.api.domains(), this.state);
    } catch {
      renderDomainsError();
    }
  }

  async loadStats(): Promise<void> {
    try {
      renderStats(await this.api.stats());
    } catch {
      hideStatsPanel();
    }
  }
}

export type { CategoryName, RankMode };
