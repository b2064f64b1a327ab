import pytest
from hypothesis import given, settings, strategies as st

from fwminer.corpus import sentence_from_text
from fwminer.features import (
    FeatureConfig,
    FeatureSpace,
    FeatureVector,
    fit_feature_space,
    group_of_index,
    vectorize,
)
from fwminer.templates import (
    CANONICAL_BANK_ORDER,
    Category,
    count_manual_matches,
    is_subsequence,
)


def sent(text):
    return sentence_from_text(text)


def labeled_corpus():
    rows = [
        ("we plan to extend our parser model to web text", Category.METHOD),
        ("we plan to extend the parser model to dialogue text", Category.METHOD),
        ("we will improve the parser model with new features", Category.METHOD),
        ("we apply the approach to the opinion task domain", Category.PROBLEM),
        ("we apply our approach to another extraction task domain", Category.PROBLEM),
        ("we investigate the task domain of noisy text", Category.PROBLEM),
        ("we evaluate the system on three benchmark datasets", Category.EVALUATION),
        ("we evaluate our parser on larger benchmark datasets", Category.EVALUATION),
        ("future work future work future work here", Category.OTHER),
        ("we release the source code and the corpus", Category.OTHER),
        ("the source code will be public and available", Category.OTHER),
    ]
    return [(sent(t), c) for t, c in rows]


def dense_reference_vector(sentence, space):
    """Naive dense vectorizer used as the oracle."""
    vec = [0.0] * space.dim
    off = space.offsets
    stems = set(sentence.stems)
    for i, s in enumerate(space.unigram_vocab):
        if s in stems:
            vec[off[0] + i] = 1.0
    pairs = set(zip(sentence.stems, sentence.stems[1:]))
    for i, pair in enumerate(space.bigram_vocab):
        if pair in pairs:
            vec[off[1] + i] = 1.0
    counts = count_manual_matches(sentence, list(space.manual_bank))
    for i, c in enumerate(counts):
        vec[off[2] + i] = float(c)
    for i, p in enumerate(space.auto_patterns):
        vec[off[3] + i] = 1.0 if is_subsequence(p.stems, sentence.stems) else 0.0
    return vec


class TestFit:
    def test_min_df_threshold(self):
        space = fit_feature_space(labeled_corpus(), FeatureConfig())
        assert "parser" in space.unigram_vocab  # df 4 >= 3
        assert "dialogu" not in space.unigram_vocab  # df 1

    def test_stopwords_excluded_from_unigrams(self, stopwords):
        space = fit_feature_space(labeled_corpus(), FeatureConfig())
        for s in space.unigram_vocab:
            assert not stopwords.is_stop_stem(s, include_future_work=True)

    def test_future_work_bigram_excluded(self):
        space = fit_feature_space(labeled_corpus(), FeatureConfig(min_bigram_df=2))
        assert ("futur", "work") not in space.bigram_vocab

    def test_fit_deterministic_byte_for_byte(self):
        a = fit_feature_space(labeled_corpus(), FeatureConfig())
        b = fit_feature_space(labeled_corpus(), FeatureConfig())
        assert a.to_json() == b.to_json()

    def test_permutation_invariant(self):
        data = labeled_corpus()
        a = fit_feature_space(data, FeatureConfig())
        b = fit_feature_space(list(reversed(data)), FeatureConfig())
        assert a.to_json() == b.to_json()

    def test_empty_labeled_rejected(self):
        with pytest.raises(ValueError):
            fit_feature_space([], FeatureConfig())

    def test_roundtrip_serialization(self):
        space = fit_feature_space(labeled_corpus(), FeatureConfig())
        again = FeatureSpace.from_json(space.to_json())
        assert again.to_json() == space.to_json()
        assert again.dim == space.dim

    def test_offsets_partition_dimension(self):
        space = fit_feature_space(labeled_corpus(), FeatureConfig())
        off = space.offsets
        assert off[0] == 0
        assert off[1] == len(space.unigram_vocab)
        assert off[2] == off[1] + len(space.bigram_vocab)
        assert off[3] == off[2] + 11
        assert space.dim == off[3] + len(space.auto_patterns)

    def test_summary_reports_group_sizes(self):
        space = fit_feature_space(labeled_corpus(), FeatureConfig())
        summary = space.summary()
        assert summary["manual_template_sets"] == 11
        assert summary["dim"] == space.dim


class TestVectorize:
    def test_empty_sentence(self):
        space = fit_feature_space(labeled_corpus(), FeatureConfig())
        fv = vectorize(sent(""), space)
        assert fv.indices == ()

    def test_binary_not_counted(self):
        space = fit_feature_space(labeled_corpus(), FeatureConfig())
        fv = vectorize(sent("parser parser parser"), space)
        idx = space.unigram_vocab.index("parser")
        pos = fv.indices.index(idx)
        assert fv.values[pos] == 1.0

    def test_dense_oracle_equivalence(self):
        space = fit_feature_space(labeled_corpus(), FeatureConfig())
        for text in [
            "we plan to extend our parser model",
            "we evaluate the benchmark datasets",
            "we apply the approach to the task domain",
            "release the source code",
            "",
        ]:
            s = sent(text)
            fv = vectorize(s, space)
            dense = dense_reference_vector(s, space)
            sparse_as_dense = [0.0] * space.dim
            for i, v in zip(fv.indices, fv.values):
                sparse_as_dense[i] = v
            assert sparse_as_dense == dense

    def test_every_index_in_exactly_one_group(self):
        space = fit_feature_space(labeled_corpus(), FeatureConfig())
        fv = vectorize(sent("we plan to extend our parser model to web text"), space)
        for i in fv.indices:
            assert group_of_index(space, i) in {"unigram", "bigram", "manual", "auto"}

    def test_manual_counts_positive_integers(self):
        space = fit_feature_space(labeled_corpus(), FeatureConfig())
        fv = vectorize(sent("we apply the model to this task and domain"), space)
        off = space.offsets
        for i, v in zip(fv.indices, fv.values):
            if off[2] <= i < off[3]:
                assert v >= 1 and v == int(v)

    def test_indices_strictly_increasing(self):
        space = fit_feature_space(labeled_corpus(), FeatureConfig())
        fv = vectorize(sent("we plan to extend our parser model"), space)
        assert list(fv.indices) == sorted(set(fv.indices))


class TestFeatureVectorInvariants:
    def test_parallel_lists_enforced(self):
        with pytest.raises(ValueError):
            FeatureVector(indices=(0, 1), values=(1.0,), dim=4)

    def test_strictly_increasing_enforced(self):
        with pytest.raises(ValueError):
            FeatureVector(indices=(1, 1), values=(1.0, 1.0), dim=4)

    def test_range_enforced(self):
        with pytest.raises(ValueError):
            FeatureVector(indices=(5,), values=(1.0,), dim=4)

    @settings(max_examples=50, deadline=None)
    @given(st.lists(st.sampled_from("abcdef"), min_size=0, max_size=12))
    def test_vectorize_total_function(self, words):
        space = fit_feature_space(labeled_corpus(), FeatureConfig())
        fv = vectorize(sent(" ".join(words)), space)
        assert fv.dim == space.dim
