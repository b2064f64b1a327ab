"""fwminer: mine, classify, analyze and search future-work sentences."""

from .corpus import Document, DomainTag, Section, Sentence, load_corpus
from .extraction import ExtractedSentence, RegexTiers, extract_future_sentences
from .records import FutureWorkRecord
from .templates import Category

__version__ = "0.1.0"

__all__ = [
    "Category",
    "Document",
    "DomainTag",
    "ExtractedSentence",
    "FutureWorkRecord",
    "RegexTiers",
    "Section",
    "Sentence",
    "extract_future_sentences",
    "load_corpus",
    "__version__",
]
