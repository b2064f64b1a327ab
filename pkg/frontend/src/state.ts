import type { CategoryName, RankMode } from "./types.js";

export const PAGE_SIZE = 10;

export const RANK_MODES: RankMode[] = ["pagerank", "date", "citations"];
export const CATEGORIES: CategoryName[] = ["problem", "method", "evaluation", "other"];

/** Everything the page renders is a function of this state; the URL query
 * string is its single serialized source of truth. */
export interface UiState {
  query: string;
  domain: string | null;
  category: CategoryName | null; // null = "All"
  rank: RankMode;
  page: number;
}

export function defaultState(): UiState {
  return { query: "", domain: null, category: null, rank: "pagerank", page: 0 };
}

/** Serialize only the fields that differ from the defaults, so plain URLs
 * stay clean and shareable. */
export function stateToQuery(state: UiState): string {
  const params = new URLSearchParams();
  if (state.query) params.set("q", state.query);
  if (state.domain) params.set("domain", state.domain);
  if (state.category) params.set("category", state.category);
  if (state.rank !== "pagerank") params.set("rank", state.rank);
  if (state.page > 0) params.set("page", String(state.page));
  const qs = params.toString();
  return qs ? `?${qs}` : "";
}

export function stateFromQuery(queryString: string): UiState {
  const params = new URLSearchParams(queryString);
  const state = defaultState();
  state.query = params.get("q") ?? "";
  state.domain = params.get("domain");
  const category = params.get("category");
  state.category = CATEGORIES.includes(category as CategoryName)
    ? (category as CategoryName)
    : null;
  const rank = params.get("rank");
  state.rank = RANK_MODES.includes(rank as RankMode) ? (rank as RankMode) : "pagerank";
  const page = Number(params.get("page") ?? "0");
  state.page = Number.isInteger(page) && page > 0 ? page : 0;
  return state;
}

/** Parameters for GET /api/search. */
export function searchParams(state: UiState): URLSearchParams {
  const params = new URLSearchParams();
  params.set("q", state.query);
  if (state.domain) params.set("domain", state.domain);
  if (state.category) params.set("category", state.category);
  params.set("rank", state.rank);
  params.set("limit", String(PAGE_SIZE));
  params.set("offset", String(state.page * PAGE_SIZE));
  return params;
}
