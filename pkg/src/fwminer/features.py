"""Frozen feature space over labeled sentences and sparse vectorization.

Four feature groups, laid out contiguously: unigram presence bits, adjacent
bigram presence bits, the 11 manual-template match counts, and automatic
template subsequence bits.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .corpus import Sentence
from .templates import (
    CANONICAL_BANK_ORDER,
    Category,
    ManualTemplateSet,
    MiningConfig,
    SequentialPattern,
    count_manual_matches,
    is_subsequence,
    load_template_bank,
    mine_templates,
)
from .text import StopwordLists

FORMAT_VERSION = 1

_EXCLUDED_BIGRAMS = frozenset({("futur", "work")})


@dataclass(frozen=True)
class FeatureConfig:
    min_unigram_df: int = 3
    min_bigram_df: int = 3
    mining: MiningConfig = field(default_factory=MiningConfig)

    def to_dict(self) -> dict:
        return {
            "min_unigram_df": self.min_unigram_df,
            "min_bigram_df": self.min_bigram_df,
            "mining": {
                "min_length": self.mining.min_length,
                "min_support": self.mining.min_support,
                "min_sentence_words": self.mining.min_sentence_words,
                "max_length": self.mining.max_length,
            },
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "FeatureConfig":
        return cls(
            min_unigram_df=obj["min_unigram_df"],
            min_bigram_df=obj["min_bigram_df"],
            mining=MiningConfig(**obj["mining"]),
        )


@dataclass(frozen=True)
class FeatureVector:
    indices: tuple[int, ...]
    values: tuple[float, ...]
    dim: int

    def __post_init__(self) -> None:
        if len(self.indices) != len(self.values):
            raise ValueError("indices and values must be parallel")
        if any(b <= a for a, b in zip(self.indices, self.indices[1:])):
            raise ValueError("indices must be strictly increasing")
        if self.indices and (self.indices[0] < 0 or self.indices[-1] >= self.dim):
            raise ValueError("index out of range")


@dataclass(frozen=True)
class FeatureSpace:
    unigram_vocab: tuple[str, ...]
    bigram_vocab: tuple[tuple[str, str], ...]
    manual_bank: tuple[ManualTemplateSet, ...]
    auto_patterns: tuple[SequentialPattern, ...]
    config: FeatureConfig

    @property
    def offsets(self) -> tuple[int, int, int, int]:
        u = len(self.unigram_vocab)
        b = len(self.bigram_vocab)
        return (0, u, u + b, u + b + len(self.manual_bank))

    @property
    def dim(self) -> int:
        return self.offsets[3] + len(self.auto_patterns)

    def summary(self) -> dict:
        return {
            "unigrams": len(self.unigram_vocab),
            "bigrams": len(self.bigram_vocab),
            "manual_template_sets": len(self.manual_bank),
            "auto_templates": len(self.auto_patterns),
            "dim": self.dim,
        }

    def to_json(self) -> str:
        payload = {
            "version": FORMAT_VERSION,
            "unigrams": list(self.unigram_vocab),
            "bigrams": [list(p) for p in self.bigram_vocab],
            "manual_bank": [
                {"category": ts.category.value, "kind": ts.kind, "patterns": list(ts.patterns)}
                for ts in self.manual_bank
            ],
            "auto_patterns": [
                {"stems": list(p.stems), "support": p.support, "category_origin": p.category_origin}
                for p in self.auto_patterns
            ],
            "offsets": list(self.offsets),
            "config": self.config.to_dict(),
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "FeatureSpace":
        obj = json.loads(text)
        if obj.get("version") != FORMAT_VERSION:
            raise ValueError(f"unsupported feature space version {obj.get('version')!r}")
        return cls(
            unigram_vocab=tuple(obj["unigrams"]),
            bigram_vocab=tuple(tuple(p) for p in obj["bigrams"]),
            manual_bank=tuple(
                ManualTemplateSet(
                    category=Category(ts["category"]),
                    kind=ts["kind"],
                    patterns=tuple(ts["patterns"]),
                )
                for ts in obj["manual_bank"]
            ),
            auto_patterns=tuple(
                SequentialPattern(
                    stems=tuple(p["stems"]),
                    support=p["support"],
                    category_origin=p.get("category_origin", ""),
                )
                for p in obj["auto_patterns"]
            ),
            config=FeatureConfig.from_dict(obj["config"]),
        )


def _by_frequency(df: dict, min_df: int) -> list:
    kept = [(key, n) for key, n in df.items() if n >= min_df]
    kept.sort(key=lambda kv: (-kv[1], kv[0]))
    return [key for key, _ in kept]


def fit_feature_space(
    labeled: list[tuple[Sentence, Category]],
    cfg: FeatureConfig | None = None,
    stopwords: StopwordLists | None = None,
    manual_bank: list[ManualTemplateSet] | None = None,
) -> FeatureSpace:
    """Fit vocabularies and mine auto templates on the training data.

    Vocabulary order is descending document frequency with lexicographic
    ties, so the fitted space is independent of input order.
    """
    if not labeled:
        raise ValueError("labeled data must be non-empty")
    if stopwords is None:
        stopwords = StopwordLists.bundled()
    if manual_bank is None:
        manual_bank = load_template_bank()

    unigram_df: dict[str, int] = {}
    bigram_df: dict[tuple[str, str], int] = {}
    for sentence, _ in labeled:
        for s in set(sentence.stems):
            if not stopwords.is_stop_stem(s, include_future_work=True):
                unigram_df[s] = unigram_df.get(s, 0) + 1
        pairs = set(zip(sentence.stems, sentence.stems[1:]))
        for a, b in pairs:
            if (a, b) in _EXCLUDED_BIGRAMS:
                continue
            if stopwords.is_stop_stem(a, include_future_work=True) and stopwords.is_stop_stem(
                b, include_future_work=True
            ):
                continue
            bigram_df[(a, b)] = bigram_df.get((a, b), 0) + 1

    cfg = cfg or FeatureConfig()
    auto = mine_templates(labeled, cfg.mining, stopwords)
    return FeatureSpace(
        unigram_vocab=tuple(_by_frequency(unigram_df, cfg.min_unigram_df)),
        bigram_vocab=tuple(_by_frequency(bigram_df, cfg.min_bigram_df)),
        manual_bank=tuple(manual_bank),
        auto_patterns=tuple(auto),
        config=cfg,
    )


def vectorize(sentence: Sentence, space: FeatureSpace) -> FeatureVector:
    """Sparse feature vector for one sentence in the fitted space."""
    indices: list[int] = []
    values: list[float] = []
    off = space.offsets

    stems = set(sentence.stems)
    for i, s in enumerate(space.unigram_vocab):
        if s in stems:
            indices.append(off[0] + i)
            values.append(1.0)

    pairs = set(zip(sentence.stems, sentence.stems[1:]))
    for i, pair in enumerate(space.bigram_vocab):
        if pair in pairs:
            indices.append(off[1] + i)
            values.append(1.0)

    for i, count in enumerate(count_manual_matches(sentence, list(space.manual_bank))):
        if count > 0:
            indices.append(off[2] + i)
            values.append(float(count))

    for i, pattern in enumerate(space.auto_patterns):
        if is_subsequence(pattern.stems, sentence.stems):
            indices.append(off[3] + i)
            values.append(1.0)

    return FeatureVector(indices=tuple(indices), values=tuple(values), dim=space.dim)


def group_of_index(space: FeatureSpace, index: int) -> str:
    """Which feature group an index belongs to (bookkeeping check)."""
    off = space.offsets
    if index < 0 or index >= space.dim:
        raise IndexError(index)
    if index < off[1]:
        return "unigram"
    if index < off[2]:
        return "bigram"
    if index < off[3]:
        return "manual"
    return "auto"


# Re-exported for callers that fit and vectorize in one pass.
__all__ = [
    "FeatureConfig",
    "FeatureSpace",
    "FeatureVector",
    "fit_feature_space",
    "vectorize",
    "group_of_index",
    "CANONICAL_BANK_ORDER",
]
