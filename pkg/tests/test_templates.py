import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_force_patterns

from fwminer.corpus import sentence_from_text
from fwminer.templates import (
    CANONICAL_BANK_ORDER,
    CATEGORY_ORDER,
    Category,
    ManualTemplateSet,
    MiningConfig,
    count_manual_matches,
    is_subsequence,
    match_auto_templates,
    mine_templates,
    prefixspan,
)
from fwminer.text import StopwordLists


def sent(text):
    return sentence_from_text(text)


class TestCategory:
    def test_exactly_four_in_order(self):
        assert [c.value for c in CATEGORY_ORDER] == [
            "problem", "method", "evaluation", "other",
        ]

    def test_eleven_canonical_sets(self):
        assert len(CANONICAL_BANK_ORDER) == 11
        assert (Category.EVALUATION, "regex") not in CANONICAL_BANK_ORDER


class TestManualTemplates:
    def test_method_regex_explore_feature(self, template_bank):
        counts = count_manual_matches(
            sent("We will explore richer features for our model."), template_bank
        )
        method_regex = CANONICAL_BANK_ORDER.index((Category.METHOD, "regex"))
        assert counts[method_regex] >= 1

    def test_empty_sentence_all_zero(self, template_bank):
        assert count_manual_matches(sent(""), template_bank) == [0] * 11

    def test_problem_word_and_phrase(self, template_bank):
        counts = count_manual_matches(
            sent("We aim at a further research direction for this task."), template_bank
        )
        p_word = CANONICAL_BANK_ORDER.index((Category.PROBLEM, "word"))
        p_phrase = CANONICAL_BANK_ORDER.index((Category.PROBLEM, "phrase"))
        assert counts[p_word] >= 2  # "task", "direction" (stem-matched)
        assert counts[p_phrase] >= 2  # "aim at", "further research"

    def test_counts_bounded_by_set_size(self, template_bank):
        text = "apply capture task direction domain topic area issue contribution problem investigate"
        counts = count_manual_matches(sent(text + " " + text), template_bank)
        for c, ts in zip(counts, template_bank):
            assert 0 <= c <= len(ts.patterns)

    def test_word_patterns_match_stems(self):
        ts = ManualTemplateSet(Category.PROBLEM, "word", ("applying",))
        assert ts.count_matches(sent("We apply it.")) == 1  # applyi/apply share stem "appli"

    def test_phrase_requires_contiguity(self):
        ts = ManualTemplateSet(Category.PROBLEM, "phrase", ("error analysis",))
        assert ts.count_matches(sent("an error analysis of outputs")) == 1
        assert ts.count_matches(sent("an error in this analysis")) == 0

    def test_bad_kind_rejected(self):
        with pytest.raises(ValueError):
            ManualTemplateSet(Category.PROBLEM, "glob", ("x",))

    def test_wrong_bank_size_rejected(self, template_bank):
        with pytest.raises(ValueError):
            count_manual_matches(sent("x"), template_bank[:-1])


class TestPrefixspan:
    def test_spec_example_database(self):
        database = [
            ("we", "plan", "extend", "model"),
            ("we", "plan", "improv", "model"),
        ]
        got = {p.stems: p.support for p in prefixspan(database, 2, 2, 6)}
        assert got == {
            ("we", "plan"): 2,
            ("we", "model"): 2,
            ("plan", "model"): 2,
            ("we", "plan", "model"): 2,
        }

    def test_single_sequence_cannot_reach_support_two(self):
        assert prefixspan([("a", "b", "c")], 2, 2, 6) == []

    def test_repeated_items_counted_once_per_sequence(self):
        got = {p.stems: p.support for p in prefixspan([("a", "a"), ("a",)], 2, 1, 6)}
        assert got[("a",)] == 2

    @settings(max_examples=300, deadline=None)
    @given(
        st.lists(
            st.lists(st.sampled_from("abcde"), max_size=6).map(tuple),
            max_size=8,
        ),
        st.sampled_from([2, 3]),
        st.sampled_from([1, 2]),
    )
    def test_oracle_equivalence(self, database, min_support, min_length):
        got = {p.stems: p.support for p in prefixspan(database, min_support, min_length, 6)}
        assert got == brute_force_patterns(database, min_support, min_length, 6)

    @settings(max_examples=100, deadline=None)
    @given(
        st.lists(
            st.lists(st.sampled_from("abcd"), max_size=6).map(tuple),
            max_size=6,
        )
    )
    def test_anti_monotonicity(self, database):
        patterns = {p.stems: p.support for p in prefixspan(database, 2, 2, 6)}
        full = {p.stems: p.support for p in prefixspan(database, 1, 1, 6)}
        for stems in patterns:
            for cut in range(2, len(stems)):
                assert full[stems[:cut]] >= 2

    @settings(max_examples=100, deadline=None)
    @given(
        st.lists(
            st.lists(st.sampled_from("abcd"), max_size=5).map(tuple),
            max_size=6,
        )
    )
    def test_threshold_monotonicity(self, database):
        low = {p.stems for p in prefixspan(database, 2, 2, 6)}
        high = {p.stems for p in prefixspan(database, 3, 2, 6)}
        assert high <= low
        longer = {p.stems for p in prefixspan(database, 2, 1, 6)}
        assert low <= longer


class TestMineTemplates:
    def _labeled(self, texts, category=Category.METHOD):
        return [(sent(t), category) for t in texts]

    def test_empty_labeled(self, stopwords):
        assert mine_templates([], MiningConfig(), stopwords) == []

    def test_short_sentences_dropped(self, stopwords):
        labeled = self._labeled(["extend model now", "extend model now"])  # 3 words < 5
        assert mine_templates(labeled, MiningConfig(), stopwords) == []

    def test_one_sentence_min_support_two(self, stopwords):
        labeled = self._labeled(["we plan to extend our parser model"])
        assert mine_templates(labeled, MiningConfig(), stopwords) == []

    def test_all_stopword_patterns_dropped(self):
        custom = StopwordLists(
            general=frozenset({"we", "to", "our"}),
            general_stems=frozenset({"we", "to", "our"}),
            future_work_stems=frozenset({"plan"}),
        )
        labeled = self._labeled(
            [
                "we plan to extend our model",
                "we plan to improve our model",
            ]
        )
        mined = {p.stems for p in mine_templates(labeled, MiningConfig(), custom)}
        # ("we", "plan") is all-stopword once the future-work list counts
        assert ("we", "plan") not in mined
        assert ("we", "model") in mined

    def test_plan_survives_without_fw_stopword(self):
        custom = StopwordLists(
            general=frozenset({"we", "to", "our"}),
            general_stems=frozenset({"we", "to", "our"}),
            future_work_stems=frozenset(),
        )
        labeled = self._labeled(
            [
                "we plan to extend our model",
                "we plan to improve our model",
            ]
        )
        mined = {p.stems for p in mine_templates(labeled, MiningConfig(), custom)}
        assert ("we", "plan") in mined

    def test_categories_mined_independently(self, stopwords):
        labeled = [
            (sent("alpha beta gamma delta epsilon"), Category.PROBLEM),
            (sent("alpha beta gamma delta epsilon"), Category.METHOD),
        ]
        # each category has one sentence -> support 2 unreachable inside a category
        assert mine_templates(labeled, MiningConfig(), stopwords) == []

    def test_duplicates_merged_with_first_origin(self, stopwords):
        labeled = [
            (sent("alpha beta gamma delta epsilon"), Category.PROBLEM),
            (sent("alpha beta gamma delta zeta"), Category.PROBLEM),
            (sent("alpha beta gamma delta epsilon"), Category.METHOD),
            (sent("alpha beta gamma delta zeta"), Category.METHOD),
        ]
        mined = mine_templates(labeled, MiningConfig(), stopwords)
        origins = {p.stems: p.category_origin for p in mined}
        assert origins[("alpha", "beta")] == "problem"
        stems = [p.stems for p in mined]
        assert len(stems) == len(set(stems))


class TestMatchAutoTemplates:
    def test_subsequence_hit(self):
        s = sentence_from_text("we plan to extend our model")
        assert is_subsequence(("plan", "model"), s.stems)

    def test_order_violation(self):
        s = sentence_from_text("we plan to extend our model")
        assert not is_subsequence(("model", "plan"), s.stems)

    def test_vector_against_naive_oracle(self):
        from fwminer.templates import SequentialPattern

        s = sentence_from_text("we plan to extend our model")
        patterns = [
            SequentialPattern(("we", "extend"), 2),
            SequentialPattern(("extend", "we"), 2),
            SequentialPattern(("plan", "model"), 2),
        ]

        def naive(p, stems):
            pos = 0
            for item in p:
                while pos < len(stems) and stems[pos] != item:
                    pos += 1
                if pos == len(stems):
                    return 0
                pos += 1
            return 1

        expected = [naive(p.stems, s.stems) for p in patterns]
        assert match_auto_templates(s, patterns) == expected == [1, 0, 1]
