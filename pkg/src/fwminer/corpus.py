"""Corpus loading, domain assignment, section selection and segmentation.

Input corpora are JSON Lines files, one paper per line:

    {"id": str, "title": str, "year": int, "venue": str,
     "citation_count": int, "domains": [str]?,
     "sections": [{"heading": str, "kind": str?, "text": str}]}

Unknown fields are ignored.  Section ``kind`` is taken from the explicit
field when present and inferred from the heading otherwise.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .text import split_sentences, tokenize_and_stem


class CorpusError(ValueError):
    """Raised for malformed corpus files."""


SECTION_KINDS = ("future_work", "conclusion", "other")

# Heading -> kind inference table (headings normalized before lookup).
_FUTURE_WORK_HEADINGS = frozenset(
    {"future work", "future works", "future directions", "conclusion and future work"}
)
_CONCLUSION_HEADINGS = frozenset({"conclusion", "conclusions"})

_HEADING_NOISE_RE = re.compile(r"^[\s\d.:\-()]+|[\s.:\-()]+$")


@dataclass(frozen=True)
class DomainTag:
    """Research-area label assigned by keyword matching against titles."""

    name: str
    keywords: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.keywords:
            raise ValueError(f"domain tag {self.name!r} has no keywords")

    def matches(self, title: str) -> bool:
        low = title.lower()
        return any(
            re.search(rf"\b{re.escape(kw)}\b", low) for kw in self.keywords
        )


DEFAULT_DOMAIN_TAGS = (
    DomainTag("parse", ("parse", "parsing", "parser", "parsers")),
    DomainTag("machine_translation", ("translation", "mt")),
    DomainTag("emotion_analysis", ("emotion", "opinion", "sentiment")),
    DomainTag("summarization", ("summarization", "summary", "summarizing")),
)


@dataclass(frozen=True)
class Section:
    heading: str
    kind: str
    text: str


@dataclass(frozen=True)
class Sentence:
    doc_id: str
    section_index: int
    sentence_index: int
    text: str
    tokens: tuple[str, ...]
    stems: tuple[str, ...]

    @property
    def key(self) -> tuple[str, int, int]:
        return (self.doc_id, self.section_index, self.sentence_index)


@dataclass(frozen=True)
class Document:
    id: str
    title: str
    year: int
    venue: str
    citation_count: int
    domains: frozenset[str] = field(default_factory=frozenset)
    sections: tuple[Section, ...] = ()


def infer_section_kind(heading: str) -> str:
    norm = _HEADING_NOISE_RE.sub("", heading.lower())
    if norm in _FUTURE_WORK_HEADINGS:
        return "future_work"
    if norm in _CONCLUSION_HEADINGS:
        return "conclusion"
    return "other"


def _require(obj: dict, name: str, types, line_no: int):
    if name not in obj:
        raise CorpusError(f"line {line_no}: missing field {name!r}")
    value = obj[name]
    if not isinstance(value, types):
        raise CorpusError(f"line {line_no}: field {name!r} has wrong type")
    return value


def _parse_document(obj: dict, line_no: int) -> Document:
    doc_id = _require(obj, "id", str, line_no)
    title = _require(obj, "title", str, line_no)
    year = _require(obj, "year", int, line_no)
    if isinstance(year, bool) or not 1900 <= year <= 2100:
        raise CorpusError(f"line {line_no}: field 'year' out of range [1900, 2100]")
    venue = _require(obj, "venue", str, line_no)
    citations = _require(obj, "citation_count", int, line_no)
    if isinstance(citations, bool) or citations < 0:
        raise CorpusError(f"line {line_no}: field 'citation_count' must be >= 0")
    raw_sections = _require(obj, "sections", list, line_no)

    domains = obj.get("domains") or []
    if not isinstance(domains, list) or not all(isinstance(d, str) for d in domains):
        raise CorpusError(f"line {line_no}: field 'domains' must be a list of strings")

    sections = []
    for i, sec in enumerate(raw_sections):
        if not isinstance(sec, dict):
            raise CorpusError(f"line {line_no}: field 'sections[{i}]' must be an object")
        heading = sec.get("heading", "")
        text = sec.get("text")
        if not isinstance(heading, str) or not isinstance(text, str):
            raise CorpusError(
                f"line {line_no}: field 'sections[{i}]' needs string heading/text"
            )
        kind = sec.get("kind") or infer_section_kind(heading)
        if kind not in SECTION_KINDS:
            raise CorpusError(
                f"line {line_no}: field 'sections[{i}].kind' must be one of {SECTION_KINDS}"
            )
        sections.append(Section(heading=heading, kind=kind, text=text))

    return Document(
        id=doc_id,
        title=title,
        year=year,
        venue=venue,
        citation_count=citations,
        domains=frozenset(domains),
        sections=tuple(sections),
    )


def load_corpus(path) -> list[Document]:
    """Load documents from a JSON Lines file, preserving input order."""
    docs: list[Document] = []
    seen: set[str] = set()
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusError(f"line {line_no}: invalid JSON ({exc.msg})") from exc
            if not isinstance(obj, dict):
                raise CorpusError(f"line {line_no}: expected a JSON object")
            doc = _parse_document(obj, line_no)
            if doc.id in seen:
                raise CorpusError(f"line {line_no}: duplicate document id {doc.id!r}")
            seen.add(doc.id)
            docs.append(doc)
    return docs


def document_to_dict(doc: Document) -> dict:
    return {
        "id": doc.id,
        "title": doc.title,
        "year": doc.year,
        "venue": doc.venue,
        "citation_count": doc.citation_count,
        "domains": sorted(doc.domains),
        "sections": [
            {"heading": s.heading, "kind": s.kind, "text": s.text} for s in doc.sections
        ],
    }


def assign_domains(title: str, tags=DEFAULT_DOMAIN_TAGS) -> frozenset[str]:
    """Names of every tag with at least one keyword match in the title."""
    if not tags:
        raise ValueError("tags must be non-empty")
    return frozenset(tag.name for tag in tags if tag.matches(title))


def select_target_section(doc: Document) -> Section | None:
    """First future-work section, else first conclusion, else None."""
    for kind in ("future_work", "conclusion"):
        for section in doc.sections:
            if section.kind == kind:
                return section
    return None


def section_sentences(
    doc: Document, section: Section, abbreviations: frozenset[str] | None = None
) -> list[Sentence]:
    """Segment one section into Sentence records in document order."""
    idx = doc.sections.index(section)
    out = []
    for i, text in enumerate(split_sentences(section.text, abbreviations)):
        tokens, stems = tokenize_and_stem(text)
        out.append(
            Sentence(
                doc_id=doc.id,
                section_index=idx,
                sentence_index=i,
                text=text,
                tokens=tuple(tokens),
                stems=tuple(stems),
            )
        )
    return out


def sentence_from_text(text: str, doc_id: str = "", section_index: int = 0,
                       sentence_index: int = 0) -> Sentence:
    """Build a standalone Sentence (used for labeled datasets and queries)."""
    tokens, stems = tokenize_and_stem(text)
    return Sentence(
        doc_id=doc_id,
        section_index=section_index,
        sentence_index=sentence_index,
        text=text,
        tokens=tuple(tokens),
        stems=tuple(stems),
    )
