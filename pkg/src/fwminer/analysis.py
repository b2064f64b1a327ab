"""Corpus-level aggregates over classified future-work records: per-domain
sentence statistics, category distributions, and ranked phrase-frequency
tables (the data behind per-domain and per-category summaries).

Phrase candidates are maximal runs of consecutive non-stopword stems;
single-token candidates that are common English words are dropped.
"""

from __future__ import annotations

import csv
import logging
from dataclasses import dataclass

from .corpus import Sentence
from .records import FutureWorkRecord
from .stem import stem
from .templates import CATEGORY_ORDER, Category
from .text import StopwordLists, data_path, load_wordlist

logger = logging.getLogger(__name__)


def load_common_words(path=None) -> frozenset[str]:
    """Stemmed forms of the bundled common-word list."""
    path = path or data_path("common_words.txt")
    return frozenset(stem(w.lower()) for w in load_wordlist(path))


@dataclass(frozen=True)
class DomainStats:
    domain: str
    paper_count: int
    sentence_count: int
    avg_sentences_per_paper: float
    category_percentages: dict[Category, float]

    def to_dict(self) -> dict:
        return {
            "domain": self.domain,
            "paper_count": self.paper_count,
            "sentence_count": self.sentence_count,
            "avg_sentences_per_paper": self.avg_sentences_per_paper,
            "category_percentages": {
                c.value: self.category_percentages[c] for c in CATEGORY_ORDER
            },
        }


@dataclass(frozen=True)
class PhraseEntry:
    phrase: str
    count: int
    domain: str | None = None
    category: Category | None = None


def corpus_stats(records: list[FutureWorkRecord]) -> list[DomainStats]:
    """Per-domain paper counts, sentence counts, averages and category
    percentage rows, for papers with at least one record."""
    domains = sorted({d for rec in records for d in rec.domains})
    out = []
    for domain in domains:
        in_domain = [r for r in records if domain in r.domains]
        papers = {r.doc_id for r in in_domain}
        n = len(in_domain)
        percentages = {}
        for cat in CATEGORY_ORDER:
            k = sum(1 for r in in_domain if r.final_category is cat)
            percentages[cat] = 100.0 * k / n if n else 0.0
        out.append(
            DomainStats(
                domain=domain,
                paper_count=len(papers),
                sentence_count=n,
                avg_sentences_per_paper=n / len(papers) if papers else 0.0,
                category_percentages=percentages,
            )
        )
    return out


def _phrase_runs(
    stems: tuple[str, ...], stopwords: StopwordLists
) -> list[tuple[str, ...]]:
    runs = []
    current: list[str] = []
    for s in stems:
        if stopwords.is_stop_stem(s):
            if current:
                runs.append(tuple(current))
                current = []
        else:
            current.append(s)
    if current:
        runs.append(tuple(current))
    return runs


def extract_phrases(
    sentences: list[Sentence],
    stopwords: StopwordLists | None = None,
    common_words: frozenset[str] | None = None,
) -> list[PhraseEntry]:
    """Ranked phrase counts (descending count, lexicographic ties)."""
    if stopwords is None:
        stopwords = StopwordLists.bundled()
    if common_words is None:
        common_words = load_common_words()

    counts: dict[str, int] = {}
    for sentence in sentences:
        for run in _phrase_runs(sentence.stems, stopwords):
            while run and stopwords.is_stop_stem(run[0]):
                run = run[1:]
            if not run or all(stopwords.is_stop_stem(s) for s in run):
                continue
            if len(run) == 1 and run[0] in common_words:
                continue
            phrase = " ".join(run)
            counts[phrase] = counts.get(phrase, 0) + 1

    entries = [PhraseEntry(phrase=p, count=n) for p, n in counts.items()]
    entries.sort(key=lambda e: (-e.count, e.phrase))
    return entries


def _record_sentence(rec: FutureWorkRecord) -> Sentence:
    return Sentence(
        doc_id=rec.doc_id,
        section_index=0,
        sentence_index=rec.record_id,
        text=rec.text,
        tokens=rec.stems,
        stems=rec.stems,
    )


def phrase_table_by_scope(
    records: list[FutureWorkRecord],
    domain: str,
    category: Category | None = None,
    stopwords: StopwordLists | None = None,
    common_words: frozenset[str] | None = None,
) -> list[PhraseEntry]:
    """Phrase table restricted to one domain and optionally one category."""
    known = {d for rec in records for d in rec.domains}
    if domain not in known:
        logger.warning("unknown domain %r; returning empty phrase table", domain)
        return []
    scoped = [
        r
        for r in records
        if domain in r.domains and (category is None or r.final_category is category)
    ]
    entries = extract_phrases([_record_sentence(r) for r in scoped], stopwords, common_words)
    return [
        PhraseEntry(phrase=e.phrase, count=e.count, domain=domain, category=category)
        for e in entries
    ]


def build_stats_payload(
    records: list[FutureWorkRecord],
    top_phrases: int = 10,
    stopwords: StopwordLists | None = None,
    common_words: frozenset[str] | None = None,
) -> dict:
    """The stats document shared by the offline report and the HTTP API.

    Includes the head of each domain's ranked phrase table so clients can
    show phrase lists without a separate endpoint.
    """
    stats = corpus_stats(records)
    dist = {cat: 0 for cat in CATEGORY_ORDER}
    for rec in records:
        dist[rec.final_category] += 1
    total = len(records)
    stopwords = stopwords or StopwordLists.bundled()
    common = common_words or load_common_words()
    return {
        "record_count": total,
        "domains": [s.to_dict() for s in stats],
        "category_distribution": {
            cat.value: {
                "count": dist[cat],
                "percent": 100.0 * dist[cat] / total if total else 0.0,
            }
            for cat in CATEGORY_ORDER
        },
        "top_phrases": {
            s.domain: [
                {"phrase": e.phrase, "count": e.count}
                for e in phrase_table_by_scope(records, s.domain, None, stopwords, common)[:top_phrases]
            ]
            for s in stats
        },
    }


def write_phrase_csv(entries: list[PhraseEntry], path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["phrase", "count"])
        for e in entries:
            writer.writerow([e.phrase, e.count])
