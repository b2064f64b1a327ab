import { searchParams, type UiState } from "./state.js";
import type { DomainEntry, SearchResponse, StatsResponse } from "./types.js";

export class ApiError extends Error {
  readonly status: number;

  constructor(status: number, message: string) {
    super(message);
    this.status = status;
  }
}

async function getJson<T>(url: string, signal?: AbortSignal): Promise<T> {
  const response = await fetch(url, { signal });
  let body: unknown = null;
  try {
    body = await response.json();
  } catch {
    // non-JSON body: fall through to the status check
  }
  if (!response.ok) {
    const message =
      body && typeof body === "object" && "error" in body
        ? String((body as { error: unknown }).error)
        : `request failed with status ${response.status}`;
    throw new ApiError(response.status, message);
  }
  return body as T;
}

/** Thin typed client for the search service; at most one search request is
 * in flight (a new search aborts the previous one). */
export class ApiClient {
  private readonly base: string;
  private inflight: AbortController | null = null;

  constructor(base = "") {
    this.base = base.replace(/\/$/, "");
  }

  search(state: UiState): Promise<SearchResponse> {
    this.inflight?.abort();
    const controller = new AbortController();
    this.inflight = controller;
    const url = `${this.base}/api/search?${searchParams(state).toString()}`;
    return getJson<SearchResponse>(url, controller.signal);
  }

  domains(): Promise<DomainEntry[]> {
    return getJson<DomainEntry[]>(`${this.base}/api/domains`);
  }

  stats(): Promise<StatsResponse> {
    return getJson<StatsResponse>(`${this.base}/api/stats`);
  }
}

export function isAbort(err: unknown): boolean {
  return err instanceof DOMException && err.name === "AbortError";
}
