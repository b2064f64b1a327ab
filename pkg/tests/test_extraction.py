import re

import pytest
from hypothesis import given, settings, strategies as st

from oracles import reference_scan

from fwminer.corpus import Sentence, sentence_from_text
from fwminer.extraction import (
    ExtractedSentence,
    PatternError,
    RegexTiers,
    dedup_near_duplicates,
    extract_future_sentences,
    filter_valueless,
    score_extraction,
)


def sent(text, i=0):
    return sentence_from_text(text, doc_id="d", sentence_index=i)


def sents(*texts):
    return [sent(t, i) for i, t in enumerate(texts)]


SYNTH_TIERS = RegexTiers(
    tier1=(r"\balpha\b", r"\bgamma one\b"),
    tier2=(r"\bbeta\b", r"\bdelta\b"),
    valueless=(r"\bworthless\b",),
)

TIER1_SENTENCES = ["alpha opens the gate.", "Indeed gamma one fires."]
TIER2_SENTENCES = ["Then beta follows.", "And delta too."]
NEUTRAL_SENTENCES = ["Nothing to see.", "Plain filler text.", "Still neutral here."]


class TestExtract:
    def test_tier1_example(self, tiers):
        got = extract_future_sentences(
            sents("We presented a parser.", "In the future, we plan to extend our model."),
            tiers,
        )
        assert len(got) == 1
        assert got[0].matched_tier == 1
        assert got[0].sentence.sentence_index == 1

    def test_tier2_alone_never_fires(self, tiers):
        got = extract_future_sentences(
            sents("Our results suggest the approach is promising."), tiers
        )
        assert got == []

    def test_empty_section(self, tiers):
        assert extract_future_sentences([], tiers) == []

    def test_tier2_after_gate(self, tiers):
        got = extract_future_sentences(
            sents("We will extend X.", "A further direction is Y."), tiers
        )
        assert [(e.sentence.sentence_index, e.matched_tier) for e in got] == [(0, 1), (1, 2)]

    def test_future_work_bigram_does_not_gate(self, tiers):
        got = extract_future_sentences(
            sents("We leave this for future work.", "Our results suggest more."), tiers
        )
        assert got == []

    def test_future_alone_gates(self, tiers):
        got = extract_future_sentences(
            sents("In the future, such parsers may improve.", "This is to be explored."),
            tiers,
        )
        assert [(e.sentence.sentence_index, e.matched_tier) for e in got] == [(0, 1), (1, 2)]

    def test_matched_pattern_recorded(self, tiers):
        got = extract_future_sentences(sents("We plan to try."), tiers)
        assert re.search(got[0].matched_pattern, "We plan to try.", re.IGNORECASE)


class TestTierValidation:
    def test_overlapping_tiers_rejected(self):
        with pytest.raises(PatternError, match="both tiers"):
            RegexTiers(tier1=("a",), tier2=("a",), valueless=())

    def test_bad_pattern_rejected(self):
        with pytest.raises(PatternError, match="bad pattern"):
            RegexTiers(tier1=("(",), tier2=("b",), valueless=())

    def test_empty_tier_rejected(self):
        with pytest.raises(PatternError):
            RegexTiers(tier1=(), tier2=("b",), valueless=())


@st.composite
def synthetic_sections(draw):
    kinds = draw(st.lists(st.sampled_from(["t1", "t2", "n"]), max_size=12))
    texts = []
    for i, kind in enumerate(kinds):
        pool = {
            "t1": TIER1_SENTENCES,
            "t2": TIER2_SENTENCES,
            "n": NEUTRAL_SENTENCES,
        }[kind]
        texts.append(pool[draw(st.integers(0, len(pool) - 1))])
    return texts


class TestScanProperties:
    @settings(max_examples=200, deadline=None)
    @given(synthetic_sections())
    def test_oracle_equivalence(self, texts):
        got = extract_future_sentences(sents(*texts), SYNTH_TIERS)
        expected = reference_scan(texts, SYNTH_TIERS.tier1, SYNTH_TIERS.tier2)
        assert [(e.sentence.sentence_index, e.matched_tier) for e in got] == expected

    @settings(max_examples=100, deadline=None)
    @given(synthetic_sections())
    def test_gate_property(self, texts):
        # removing every tier-1-matching sentence empties the result
        t1 = [re.compile(p, re.IGNORECASE) for p in SYNTH_TIERS.tier1]
        pruned = [t for t in texts if not any(p.search(t) for p in t1)]
        assert extract_future_sentences(sents(*pruned), SYNTH_TIERS) == []

    @settings(max_examples=100, deadline=None)
    @given(synthetic_sections(), st.integers(0, 12))
    def test_prefix_property(self, texts, cut):
        cut = min(cut, len(texts))
        full = extract_future_sentences(sents(*texts), SYNTH_TIERS)
        prefix = extract_future_sentences(sents(*texts[:cut]), SYNTH_TIERS)
        truncated = [e for e in full if e.sentence.sentence_index < cut]
        assert [(e.sentence.sentence_index, e.matched_tier) for e in prefix] == [
            (e.sentence.sentence_index, e.matched_tier) for e in truncated
        ]


class TestFilterValueless:
    def test_paper_example_removed(self, tiers):
        ex = [
            ExtractedSentence(sent("There are many directions of future work to pursue here."), 1, "x")
        ]
        assert filter_valueless(ex, tiers) == []

    def test_contentful_kept(self, tiers):
        ex = [ExtractedSentence(sent("We plan to extend our model to discourse."), 1, "x")]
        assert filter_valueless(ex, tiers) == ex

    def test_order_preserved(self, tiers):
        ex = [
            ExtractedSentence(sent("We plan to extend our model to discourse.", 0), 1, "x"),
            ExtractedSentence(sent("We see several directions of future research to pursue.", 1), 1, "x"),
            ExtractedSentence(sent("We will evaluate on new data.", 2), 1, "x"),
        ]
        got = filter_valueless(ex, tiers)
        assert [e.sentence.sentence_index for e in got] == [0, 2]

    def test_idempotent(self, tiers):
        ex = [
            ExtractedSentence(sent("Much work remains to be done."), 1, "x"),
            ExtractedSentence(sent("We plan to add features."), 1, "x"),
        ]
        once = filter_valueless(ex, tiers)
        assert filter_valueless(once, tiers) == once


class TestDedup:
    def test_exact_duplicates(self, stopwords):
        ex = [
            ExtractedSentence(sent("We plan to extend our model.", 0), 1, "x"),
            ExtractedSentence(sent("We plan to extend our model.", 1), 1, "x"),
        ]
        got = dedup_near_duplicates(ex, stopwords)
        assert [e.sentence.sentence_index for e in got] == [0]

    def test_near_duplicates_by_stem_jaccard(self, stopwords):
        # content stems both reduce to {plan, extend, model}: jaccard 1.0
        ex = [
            ExtractedSentence(sent("we plan to extend our model", 0), 1, "x"),
            ExtractedSentence(sent("we plan to extend the models", 1), 1, "x"),
        ]
        got = dedup_near_duplicates(ex, stopwords)
        assert len(got) == 1
        assert got[0].sentence.sentence_index == 0

    def test_unrelated_kept(self, stopwords):
        ex = [
            ExtractedSentence(sent("We plan to extend our model.", 0), 1, "x"),
            ExtractedSentence(sent("We will collect a new corpus.", 1), 1, "x"),
        ]
        assert len(dedup_near_duplicates(ex, stopwords)) == 2

    def test_idempotent(self, stopwords):
        ex = [
            ExtractedSentence(sent("We plan to extend our model.", 0), 1, "x"),
            ExtractedSentence(sent("We plan to extend these models.", 1), 1, "x"),
            ExtractedSentence(sent("We will collect a new corpus.", 2), 1, "x"),
        ]
        once = dedup_near_duplicates(ex, stopwords)
        assert dedup_near_duplicates(once, stopwords) == once


class TestScoreExtraction:
    def test_identity(self):
        prf = score_extraction({"a", "b"}, {"a", "b"})
        assert (prf.precision, prf.recall, prf.f_measure) == (1.0, 1.0, 1.0)

    def test_worked_example(self):
        prf = score_extraction({"a", "b", "c"}, {"a", "d"})
        assert prf.precision == pytest.approx(1 / 3)
        assert prf.recall == pytest.approx(1 / 2)
        assert prf.f_measure == pytest.approx(2 / 5)

    def test_empty_prediction_convention(self):
        prf = score_extraction(set(), {"a"})
        assert (prf.precision, prf.recall, prf.f_measure) == (0.0, 0.0, 0.0)
