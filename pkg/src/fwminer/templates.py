"""The four sentence categories, the manual template bank, and automatic
template mining via prefix-projected sequential pattern growth.

Mined patterns are ordered, not necessarily contiguous stem subsequences;
support counts distinct sentences containing a pattern.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from pathlib import Path
import re

from .corpus import Sentence
from .stem import stem
from .text import StopwordLists, data_path, load_wordlist


class Category(str, enum.Enum):
    PROBLEM = "problem"
    METHOD = "method"
    EVALUATION = "evaluation"
    OTHER = "other"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


#: Canonical tie-break order: problem < method < evaluation < other.
CATEGORY_ORDER: tuple[Category, ...] = (
    Category.PROBLEM,
    Category.METHOD,
    Category.EVALUATION,
    Category.OTHER,
)

FIRST_THREE: tuple[Category, ...] = CATEGORY_ORDER[:3]


def category_rank(cat: Category) -> int:
    return CATEGORY_ORDER.index(cat)


TEMPLATE_KINDS = ("word", "phrase", "regex")

#: The 11 canonical (category, kind) combinations; evaluation has no regex set.
CANONICAL_BANK_ORDER: tuple[tuple[Category, str], ...] = tuple(
    (cat, kind)
    for cat in CATEGORY_ORDER
    for kind in TEMPLATE_KINDS
    if not (cat is Category.EVALUATION and kind == "regex")
)


@dataclass(frozen=True)
class ManualTemplateSet:
    """One of the 11 template sets.

    word patterns match single stemmed tokens, phrase patterns match
    contiguous stemmed token runs, regex patterns match the raw sentence
    text case-insensitively.
    """

    category: Category
    kind: str
    patterns: tuple[str, ...]
    _compiled: tuple = field(default=(), repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.kind not in TEMPLATE_KINDS:
            raise ValueError(f"unknown template kind {self.kind!r}")
        if self.kind == "word":
            compiled = tuple(stem(p.lower()) for p in self.patterns)
        elif self.kind == "phrase":
            compiled = tuple(
                tuple(stem(w) for w in p.lower().split()) for p in self.patterns
            )
        else:
            compiled = tuple(re.compile(p, re.IGNORECASE) for p in self.patterns)
        object.__setattr__(self, "_compiled", compiled)

    def count_matches(self, sentence: Sentence) -> int:
        """Number of patterns matching the sentence, each at most once."""
        if self.kind == "word":
            stems = set(sentence.stems)
            return sum(1 for s in self._compiled if s in stems)
        if self.kind == "phrase":
            return sum(1 for run in self._compiled if _contains_run(sentence.stems, run))
        return sum(1 for c in self._compiled if c.search(sentence.text))


def _contains_run(stems: tuple[str, ...], run: tuple[str, ...]) -> bool:
    if not run or len(run) > len(stems):
        return False
    return any(
        stems[i : i + len(run)] == run for i in range(len(stems) - len(run) + 1)
    )


def load_template_bank(directory: str | Path | None = None) -> list[ManualTemplateSet]:
    """Load the 11 sets from ``<dir>/<category>_<kind>.txt`` in canonical order."""
    d = Path(directory) if directory is not None else data_path("templates")
    bank = []
    for cat, kind in CANONICAL_BANK_ORDER:
        patterns = tuple(load_wordlist(d / f"{cat.value}_{kind}.txt"))
        bank.append(ManualTemplateSet(category=cat, kind=kind, patterns=patterns))
    return bank


def count_manual_matches(sentence: Sentence, bank: list[ManualTemplateSet]) -> list[int]:
    """Vector of per-set match counts in the bank's canonical order."""
    if len(bank) != len(CANONICAL_BANK_ORDER):
        raise ValueError(f"bank must contain the {len(CANONICAL_BANK_ORDER)} canonical sets")
    return [ts.count_matches(sentence) for ts in bank]


@dataclass(frozen=True)
class MiningConfig:
    min_length: int = 2
    min_support: int = 2
    min_sentence_words: int = 5
    max_length: int = 6

    def __post_init__(self) -> None:
        if self.min_length < 1 or self.min_support < 1:
            raise ValueError("min_length and min_support must be >= 1")
        if self.max_length < self.min_length:
            raise ValueError("max_length must be >= min_length")


@dataclass(frozen=True)
class SequentialPattern:
    stems: tuple[str, ...]
    support: int
    category_origin: str = ""


def prefixspan(
    database: list[tuple[str, ...]],
    min_support: int,
    min_length: int = 1,
    max_length: int = 6,
) -> list[SequentialPattern]:
    """All subsequence patterns with support >= ``min_support`` and length
    in [min_length, max_length].

    Grows patterns depth-first over lexicographically sorted items, so the
    output order is deterministic.  Support is the number of distinct
    sequences containing the pattern.
    """
    results: list[SequentialPattern] = []

    def grow(projected: list[tuple[int, int]], prefix: tuple[str, ...]) -> None:
        counts: dict[str, int] = {}
        for seq_idx, start in projected:
            seen: set[str] = set()
            for item in database[seq_idx][start:]:
                if item not in seen:
                    seen.add(item)
                    counts[item] = counts.get(item, 0) + 1
        for item in sorted(counts):
            support = counts[item]
            if support < min_support:
                continue
            pattern = prefix + (item,)
            if len(pattern) >= min_length:
                results.append(SequentialPattern(stems=pattern, support=support))
            if len(pattern) < max_length:
                nxt = []
                for seq_idx, start in projected:
                    seq = database[seq_idx]
                    for pos in range(start, len(seq)):
                        if seq[pos] == item:
                            nxt.append((seq_idx, pos + 1))
                            break
                grow(nxt, pattern)

    grow([(i, 0) for i in range(len(database))], ())
    return results


def is_subsequence(pattern: tuple[str, ...], stems: tuple[str, ...]) -> bool:
    it = iter(stems)
    return all(p in it for p in pattern)


def mine_templates(
    labeled: list[tuple[Sentence, Category]],
    cfg: MiningConfig | None = None,
    stopwords: StopwordLists | None = None,
) -> list[SequentialPattern]:
    """Mine per-category sequential patterns and merge them.

    Sentences shorter than ``min_sentence_words`` tokens are dropped before
    mining; all-stopword patterns are dropped after.  Duplicated stem
    sequences across categories keep their first (canonical category order)
    occurrence.
    """
    cfg = cfg or MiningConfig()
    if stopwords is None:
        stopwords = StopwordLists.bundled()

    merged: dict[tuple[str, ...], SequentialPattern] = {}
    for cat in CATEGORY_ORDER:
        database = [
            s.stems
            for s, c in labeled
            if c is cat and len(s.tokens) >= cfg.min_sentence_words
        ]
        if not database:
            continue
        for pat in prefixspan(database, cfg.min_support, cfg.min_length, cfg.max_length):
            if all(
                stopwords.is_stop_stem(s, include_future_work=True) for s in pat.stems
            ):
                continue
            if pat.stems not in merged:
                merged[pat.stems] = SequentialPattern(
                    stems=pat.stems, support=pat.support, category_origin=cat.value
                )
    return list(merged.values())


def match_auto_templates(
    sentence: Sentence, patterns: list[SequentialPattern]
) -> list[int]:
    """Binary vector: 1 where the pattern occurs as a stem subsequence."""
    return [1 if is_subsequence(p.stems, sentence.stems) else 0 for p in patterns]
