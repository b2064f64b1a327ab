"""End-to-end glue: run extraction over a corpus, load labeled data, and
turn classified sentences into searchable records."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .classifier import PairwiseModel, predict_sentence
from .corpus import (
    Document,
    Sentence,
    assign_domains,
    section_sentences,
    select_target_section,
    sentence_from_text,
)
from .extraction import (
    ExtractedSentence,
    RegexTiers,
    dedup_near_duplicates,
    extract_future_sentences,
    filter_valueless,
)
from .records import FutureWorkRecord
from .templates import Category
from .text import StopwordLists


def ensure_domains(doc: Document, tags=None) -> Document:
    """Fill in missing domain tags from the title keywords."""
    if doc.domains:
        return doc
    kwargs = {} if tags is None else {"tags": tags}
    domains = assign_domains(doc.title, **kwargs)
    return Document(
        id=doc.id,
        title=doc.title,
        year=doc.year,
        venue=doc.venue,
        citation_count=doc.citation_count,
        domains=domains,
        sections=doc.sections,
    )


def extract_from_document(
    doc: Document,
    tiers: RegexTiers,
    stopwords: StopwordLists | None = None,
    abbreviations: frozenset[str] | None = None,
) -> list[ExtractedSentence]:
    """Target-section extraction for one paper: gated two-tier scan, then
    the valueless filter, then near-duplicate removal."""
    section = select_target_section(doc)
    if section is None:
        return []
    sentences = section_sentences(doc, section, abbreviations)
    extracted = extract_future_sentences(sentences, tiers)
    extracted = filter_valueless(extracted, tiers)
    return dedup_near_duplicates(extracted, stopwords)


def extract_from_documents(
    docs: list[Document],
    tiers: RegexTiers,
    stopwords: StopwordLists | None = None,
    abbreviations: frozenset[str] | None = None,
) -> list[ExtractedSentence]:
    out: list[ExtractedSentence] = []
    for doc in docs:
        out.extend(extract_from_document(doc, tiers, stopwords, abbreviations))
    return out


def write_extraction(extracted: list[ExtractedSentence], path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for e in extracted:
            fh.write(
                json.dumps(
                    {
                        "doc_id": e.sentence.doc_id,
                        "section_index": e.sentence.section_index,
                        "sentence_index": e.sentence.sentence_index,
                        "text": e.sentence.text,
                        "tier": e.matched_tier,
                        "pattern": e.matched_pattern,
                    },
                    sort_keys=True,
                )
                + "\n"
            )


def read_extraction(path) -> list[Sentence]:
    sentences = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if not line.strip():
                continue
            obj = json.loads(line)
            sentences.append(
                sentence_from_text(
                    obj["text"],
                    doc_id=obj["doc_id"],
                    section_index=obj["section_index"],
                    sentence_index=obj["sentence_index"],
                )
            )
    return sentences


@dataclass(frozen=True)
class GoldSentence:
    doc_id: str
    section_index: int
    sentence_index: int
    text: str
    category: Category

    @property
    def key(self) -> tuple[str, int, int]:
        return (self.doc_id, self.section_index, self.sentence_index)


def load_gold(path) -> list[GoldSentence]:
    """Gold file: JSONL with doc_id/section_index/sentence_index/text/category."""
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if not line.strip():
                continue
            obj = json.loads(line)
            out.append(
                GoldSentence(
                    doc_id=obj["doc_id"],
                    section_index=obj["section_index"],
                    sentence_index=obj["sentence_index"],
                    text=obj["text"],
                    category=Category(obj["category"]),
                )
            )
    return out


def load_labeled(path) -> list[tuple[Sentence, Category]]:
    """Labeled sentences for training/eval; accepts the gold file format
    or minimal {"text", "category"} lines."""
    out = []
    with open(path, encoding="utf-8") as fh:
        for i, line in enumerate(fh):
            if not line.strip():
                continue
            obj = json.loads(line)
            sentence = sentence_from_text(
                obj["text"],
                doc_id=obj.get("doc_id", f"labeled-{i}"),
                section_index=obj.get("section_index", 0),
                sentence_index=obj.get("sentence_index", i),
            )
            out.append((sentence, Category(obj["category"])))
    return out


def build_records(
    sentences: list[Sentence],
    model: PairwiseModel,
    docs_by_id: dict[str, Document],
) -> list[FutureWorkRecord]:
    """Classify sentences and join them with their papers' metadata."""
    records = []
    for rid, sentence in enumerate(sentences):
        doc = docs_by_id.get(sentence.doc_id)
        if doc is None:
            raise KeyError(f"no corpus document with id {sentence.doc_id!r}")
        pred = predict_sentence(model, sentence)
        records.append(
            FutureWorkRecord(
                record_id=rid,
                text=sentence.text,
                stems=sentence.stems,
                final_category=pred.final_category,
                confidence=pred.confidence,
                doc_id=doc.id,
                title=doc.title,
                year=doc.year,
                venue=doc.venue,
                citation_count=doc.citation_count,
                domains=doc.domains,
            )
        )
    return records
