"""Two-tier regular-expression extraction of future-work sentences.

A sentence matching any first-tier pattern is extracted and opens a gate;
once the gate is open, sentences matching a second-tier pattern are also
extracted.  The gate resets per section.  Extracted sentences then pass a
valueless-sentence filter and near-duplicate removal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .corpus import Sentence
from .text import StopwordLists, data_path, load_wordlist


class PatternError(ValueError):
    """Raised when a tier pattern file is invalid."""


@dataclass(frozen=True)
class RegexTiers:
    """Ordered extraction pattern tiers plus the valueless filter rules."""

    tier1: tuple[str, ...]
    tier2: tuple[str, ...]
    valueless: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.tier1 or not self.tier2:
            raise PatternError("tier1 and tier2 must be non-empty")
        overlap = set(self.tier1) & set(self.tier2)
        if overlap:
            raise PatternError(f"patterns in both tiers: {sorted(overlap)}")
        for pat in (*self.tier1, *self.tier2, *self.valueless):
            try:
                re.compile(pat, re.IGNORECASE)
            except re.error as exc:
                raise PatternError(f"bad pattern {pat!r}: {exc}") from exc
        object.__setattr__(self, "_tier1_c", tuple(re.compile(p, re.IGNORECASE) for p in self.tier1))
        object.__setattr__(self, "_tier2_c", tuple(re.compile(p, re.IGNORECASE) for p in self.tier2))
        object.__setattr__(self, "_valueless_c", tuple(re.compile(p, re.IGNORECASE) for p in self.valueless))

    @classmethod
    def from_dir(cls, directory: str | Path) -> "RegexTiers":
        d = Path(directory)
        return cls(
            tier1=tuple(load_wordlist(d / "tier1.txt")),
            tier2=tuple(load_wordlist(d / "tier2.txt")),
            valueless=tuple(load_wordlist(d / "valueless.txt")),
        )

    @classmethod
    def bundled(cls) -> "RegexTiers":
        return cls.from_dir(data_path("tiers"))

    def match_tier1(self, text: str) -> str | None:
        for pat, compiled in zip(self.tier1, self._tier1_c):
            if compiled.search(text):
                return pat
        return None

    def match_tier2(self, text: str) -> str | None:
        for pat, compiled in zip(self.tier2, self._tier2_c):
            if compiled.search(text):
                return pat
        return None

    def is_valueless(self, text: str) -> bool:
        return any(c.search(text) for c in self._valueless_c)


@dataclass(frozen=True)
class ExtractedSentence:
    sentence: Sentence
    matched_tier: int
    matched_pattern: str


def extract_future_sentences(
    section_sentences: list[Sentence], tiers: RegexTiers
) -> list[ExtractedSentence]:
    """Single forward pass of the gated two-tier scan over one section."""
    found = False
    out: list[ExtractedSentence] = []
    for sent in section_sentences:
        pattern = tiers.match_tier1(sent.text)
        if pattern is not None:
            out.append(ExtractedSentence(sent, 1, pattern))
            found = True
        elif found:
            pattern = tiers.match_tier2(sent.text)
            if pattern is not None:
                out.append(ExtractedSentence(sent, 2, pattern))
    return out


def filter_valueless(
    extracted: list[ExtractedSentence], tiers: RegexTiers
) -> list[ExtractedSentence]:
    """Drop generic no-content announcements, preserving order."""
    return [e for e in extracted if not tiers.is_valueless(e.sentence.text)]


def _content_stems(sentence: Sentence, stopwords: StopwordLists) -> frozenset[str]:
    return frozenset(s for s in sentence.stems if not stopwords.is_stop_stem(s))


def _jaccard(a: frozenset[str], b: frozenset[str]) -> float:
    if not a and not b:
        return 1.0
    union = len(a | b)
    return len(a & b) / union


def dedup_near_duplicates(
    sentences: list[ExtractedSentence],
    stopwords: StopwordLists | None = None,
    threshold: float = 0.9,
) -> list[ExtractedSentence]:
    """Keep the first of any pair whose stemmed non-stopword token sets
    have Jaccard similarity >= ``threshold``."""
    if stopwords is None:
        stopwords = StopwordLists.bundled()
    kept: list[ExtractedSentence] = []
    kept_sets: list[frozenset[str]] = []
    for e in sentences:
        stems = _content_stems(e.sentence, stopwords)
        if any(_jaccard(stems, prev) >= threshold for prev in kept_sets):
            continue
        kept.append(e)
        kept_sets.append(stems)
    return kept


@dataclass(frozen=True)
class PRF:
    precision: float
    recall: float
    f_measure: float


def score_extraction(predicted: set, gold: set) -> PRF:
    """Precision/recall/F over sentence keys; 0/0 ratios are 0."""
    correct = len(set(predicted) & set(gold))
    precision = correct / len(predicted) if predicted else 0.0
    recall = correct / len(gold) if gold else 0.0
    f = (
        2 * precision * recall / (precision + recall)
        if precision + recall > 0
        else 0.0
    )
    return PRF(precision=precision, recall=recall, f_measure=f)
