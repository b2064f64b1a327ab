"""Sentence segmentation, tokenization and stopword lists.

The splitter is rule-based (terminator punctuation plus an abbreviation
list) so segmentation is deterministic and dependency-free.  Segments
partition the input text: joining them in order preserves every
non-whitespace character.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .stem import stem

_TOKEN_RE = re.compile(r"[a-z0-9]+")
_TERMINATOR_RE = re.compile(r"[.!?]+[\)\]\"'”’]*")


def data_path(*parts: str) -> Path:
    """Path to a bundled data file."""
    return Path(str(resources.files("fwminer").joinpath("data", *parts)))


def load_wordlist(path: str | Path) -> list[str]:
    """One entry per line, ``#`` comments and blank lines skipped."""
    entries = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            entries.append(line)
    return entries


@dataclass(frozen=True)
class StopwordLists:
    """General stopwords plus the future-work-specific stemmed list.

    The future-work list is applied only to feature vocabularies and
    mined-pattern filtering, never at tokenization time.
    """

    general: frozenset[str]
    general_stems: frozenset[str]
    future_work_stems: frozenset[str]

    @classmethod
    def from_files(cls, general_path: str | Path, fw_path: str | Path) -> "StopwordLists":
        general = frozenset(w.lower() for w in load_wordlist(general_path))
        fw = frozenset(w.lower() for w in load_wordlist(fw_path))
        return cls(
            general=general,
            general_stems=frozenset(stem(w) for w in general) | general,
            future_work_stems=fw,
        )

    @classmethod
    def bundled(cls) -> "StopwordLists":
        return cls.from_files(data_path("stopwords.txt"), data_path("fw_stopwords.txt"))

    def is_stop_stem(self, s: str, *, include_future_work: bool = False) -> bool:
        if s in self.general_stems:
            return True
        return include_future_work and s in self.future_work_stems


def load_abbreviations(path: str | Path | None = None) -> frozenset[str]:
    path = path or data_path("abbreviations.txt")
    return frozenset(w.lower() for w in load_wordlist(path))


_DEFAULT_ABBREVIATIONS: frozenset[str] | None = None


def _default_abbreviations() -> frozenset[str]:
    global _DEFAULT_ABBREVIATIONS
    if _DEFAULT_ABBREVIATIONS is None:
        _DEFAULT_ABBREVIATIONS = load_abbreviations()
    return _DEFAULT_ABBREVIATIONS


def _preceding_word(text: str, end: int) -> str:
    """Non-whitespace run ending at ``end`` (inclusive of dots)."""
    start = end
    while start > 0 and not text[start - 1].isspace():
        start -= 1
    return text[start:end]


def split_sentences(text: str, abbreviations: frozenset[str] | None = None) -> list[str]:
    """Split raw text into sentences at terminator punctuation.

    A terminator run ends a sentence when it is followed by whitespace and
    an uppercase letter, a digit, or an opening quote, unless the word it
    closes is a known abbreviation or a single initial.
    """
    if abbreviations is None:
        abbreviations = _default_abbreviations()

    breaks: list[int] = []
    for m in _TERMINATOR_RE.finditer(text):
        end = m.end()
        rest = text[end:]
        if rest and not rest[0].isspace():
            continue  # mid-token period, e.g. the first dot of "i.e."
        nxt = rest.lstrip()
        if nxt and not (nxt[0].isupper() or nxt[0].isdigit() or nxt[0] in "\"'“‘(["):
            continue
        if "." in m.group(0):
            word = _preceding_word(text, end).lower().lstrip("([\"'“‘")
            head = word.rstrip(".!?\")]'”’")
            if word in abbreviations or f"{head}." in abbreviations:
                continue
            if len(head) == 1 and head.isalpha():
                continue  # initials such as "J. Smith"
        breaks.append(end)

    sentences = []
    prev = 0
    for b in breaks:
        chunk = text[prev:b].strip()
        if chunk:
            sentences.append(chunk)
        prev = b
    tail = text[prev:].strip()
    if tail:
        sentences.append(tail)
    return sentences


def tokenize(text: str) -> list[str]:
    """Lowercased alphanumeric tokens."""
    return _TOKEN_RE.findall(text.lower())


def tokenize_and_stem(
    text: str, stopwords: StopwordLists | None = None
) -> tuple[list[str], list[str]]:
    """Return (tokens, stems); ``stopwords`` is accepted for signature
    parity with downstream callers but never applied here."""
    del stopwords
    tokens = tokenize(text)
    return tokens, [stem(t) for t in tokens]
