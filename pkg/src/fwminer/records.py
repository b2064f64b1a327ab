"""FutureWorkRecord: one classified future-work sentence with its source
paper metadata and ranking scores.  Records are stored as JSON Lines."""

from __future__ import annotations

import json
from dataclasses import dataclass, replace

from .templates import Category


@dataclass(frozen=True)
class FutureWorkRecord:
    record_id: int
    text: str
    stems: tuple[str, ...]
    final_category: Category
    confidence: float
    doc_id: str
    title: str
    year: int
    venue: str
    citation_count: int
    domains: frozenset[str]
    pagerank: float = 0.0

    def with_pagerank(self, score: float) -> "FutureWorkRecord":
        return replace(self, pagerank=score)

    def to_dict(self) -> dict:
        return {
            "record_id": self.record_id,
            "text": self.text,
            "stems": list(self.stems),
            "category": self.final_category.value,
            "confidence": self.confidence,
            "pagerank": self.pagerank,
            "paper": {
                "id": self.doc_id,
                "title": self.title,
                "year": self.year,
                "venue": self.venue,
                "citation_count": self.citation_count,
                "domains": sorted(self.domains),
            },
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "FutureWorkRecord":
        paper = obj["paper"]
        return cls(
            record_id=obj["record_id"],
            text=obj["text"],
            stems=tuple(obj["stems"]),
            final_category=Category(obj["category"]),
            confidence=obj["confidence"],
            doc_id=paper["id"],
            title=paper["title"],
            year=paper["year"],
            venue=paper["venue"],
            citation_count=paper["citation_count"],
            domains=frozenset(paper.get("domains", [])),
            pagerank=obj.get("pagerank", 0.0),
        )


def write_records(records: list[FutureWorkRecord], path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(rec.to_dict(), sort_keys=True) + "\n")


def read_records(path) -> list[FutureWorkRecord]:
    records = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                records.append(FutureWorkRecord.from_dict(json.loads(line)))
    return records
