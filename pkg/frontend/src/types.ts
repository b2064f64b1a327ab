export type RankMode = "pagerank" | "date" | "citations";

export type CategoryName = "problem" | "method" | "evaluation" | "other";

export interface PaperInfo {
  id: string;
  title: string;
  year: number;
  venue: string;
  citation_count: number;
}

export interface SearchResult {
  sentence: string;
  category: CategoryName;
  confidence: number;
  score: number;
  paper: PaperInfo;
}

export interface SearchResponse {
  total: number;
  results: SearchResult[];
}

export interface DomainEntry {
  name: string;
  paper_count: number;
  sentence_count: number;
}

export interface DomainStatsRow {
  domain: string;
  paper_count: number;
  sentence_count: number;
  avg_sentences_per_paper: number;
  category_percentages: Record<CategoryName, number>;
}

export interface PhraseRow {
  phrase: string;
  count: number;
}

export interface StatsResponse {
  record_count: number;
  domains: DomainStatsRow[];
  category_distribution: Record<CategoryName, { count: number; percent: number }>;
  top_phrases: Record<string, PhraseRow[]>;
}
