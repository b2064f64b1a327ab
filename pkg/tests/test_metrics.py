import numpy as np
import pytest

from oracles import oracle_metrics

from fwminer.corpus import sentence_from_text
from fwminer.metrics import (
    Confusion,
    PipelineConfig,
    category_distribution,
    compute_report,
    cross_validate,
    format_report_table,
    report_from_confusion,
    stratified_fold_assignment,
)
from fwminer.classifier import TrainConfig
from fwminer.features import FeatureConfig
from fwminer.synth import make_separable_set
from fwminer.templates import CATEGORY_ORDER, Category

P, M, E, O = CATEGORY_ORDER


def pairs_from_matrix(matrix):
    pairs = []
    for g in range(4):
        for p in range(4):
            pairs.extend([(CATEGORY_ORDER[g], CATEGORY_ORDER[p])] * matrix[g][p])
    return pairs


class TestComputeReport:
    def test_perfect_predictions(self):
        pairs = [(c, c) for c in CATEGORY_ORDER for _ in range(3)]
        report = compute_report(pairs)
        assert report.micro == (1.0, 1.0, 1.0)
        assert report.macro == (1.0, 1.0, 1.0)
        for values in report.per_class.values():
            assert values == (1.0, 1.0, 1.0)

    def test_worked_example(self):
        gold = [P, P, M, M, E, O]
        predicted = [P, M, M, M, E, O]
        report = compute_report(list(zip(gold, predicted)))
        assert report.micro[0] == pytest.approx(0.8333, abs=1e-4)
        assert report.micro[1] == pytest.approx(0.8333, abs=1e-4)
        assert report.macro[0] == pytest.approx(0.9167, abs=1e-4)
        assert report.macro[1] == pytest.approx(0.875, abs=1e-4)
        assert report.macro[2] == pytest.approx(0.8953, abs=1e-4)

    def test_absent_class_still_divides_by_four(self):
        pairs = [(P, P), (M, M), (E, E)]  # "other" never appears
        report = compute_report(pairs)
        assert report.per_class[O] == (0.0, 0.0, 0.0)
        assert report.macro[0] == pytest.approx(3 / 4)
        assert "other" in report.zero_division_classes

    def test_permutation_invariant(self):
        rng = np.random.default_rng(3)
        pairs = [
            (CATEGORY_ORDER[int(g)], CATEGORY_ORDER[int(p)])
            for g, p in rng.integers(0, 4, size=(40, 2))
        ]
        a = compute_report(pairs)
        order = rng.permutation(len(pairs))
        b = compute_report([pairs[int(i)] for i in order])
        assert a.micro == b.micro and a.macro == b.macro
        assert a.confusion == b.confusion

    def test_oracle_equivalence_on_random_matrices(self):
        rng = np.random.default_rng(42)
        for _ in range(50):
            matrix = rng.integers(0, 9, size=(4, 4)).tolist()
            if sum(map(sum, matrix)) == 0:
                matrix[0][0] = 1
            report = compute_report(pairs_from_matrix(matrix))
            expected = oracle_metrics(matrix)
            got = (*report.micro, *report.macro)
            for g, e in zip(got, expected):
                assert g == pytest.approx(e, abs=1e-12)
            # single-label assignment: micro p = r = f
            assert report.micro[0] == pytest.approx(report.micro[1], abs=1e-12)
            assert report.micro[0] == pytest.approx(report.micro[2], abs=1e-12)

    def test_empty_pairs_rejected(self):
        with pytest.raises(ValueError):
            compute_report([])

    def test_report_serializes(self):
        report = compute_report([(P, P), (M, E)])
        obj = report.to_dict()
        assert set(obj["per_class"]) == {"problem", "method", "evaluation", "other"}
        assert "Micro average" in format_report_table(report)


class TestFolds:
    def test_724_instances_split_144_or_145(self):
        labels = [CATEGORY_ORDER[i % 4] for i in range(724)]
        assignment = stratified_fold_assignment(labels, 5, seed=42)
        sizes = sorted(assignment.count(f) for f in range(5))
        assert sum(sizes) == 724
        assert set(sizes) <= {144, 145}

    def test_same_seed_same_assignment(self):
        labels = [CATEGORY_ORDER[i % 4] for i in range(100)]
        a = stratified_fold_assignment(labels, 5, seed=7)
        b = stratified_fold_assignment(labels, 5, seed=7)
        assert a == b

    def test_stratification_balances_classes(self):
        labels = [P] * 50 + [M] * 50
        assignment = stratified_fold_assignment(labels, 5, seed=0)
        for fold in range(5):
            in_fold = [labels[i] for i, f in enumerate(assignment) if f == fold]
            assert in_fold.count(P) == 10 and in_fold.count(M) == 10


def _symmetric_sentences():
    rows = []
    for i in range(4):
        rows += [
            (sentence_from_text("alphamark filler one two three", doc_id=f"a{i}"), P),
            (sentence_from_text("bravomark filler one two three", doc_id=f"b{i}"), M),
            (sentence_from_text("charliemark filler one two three", doc_id=f"c{i}"), E),
            (sentence_from_text("deltamark filler one two three", doc_id=f"d{i}"), O),
        ]
    return rows


class TestCrossValidate:
    def test_duplicated_symmetric_data_identical_folds(self):
        report = cross_validate(_symmetric_sentences(), k=2, seed=5)
        # both folds hold two copies of each class: averaged == each fold
        assert report.micro[0] == report.micro[1]
        assert report.confusion.total == 16

    def test_same_seed_identical_reports(self):
        data = make_separable_set(n=40, seed=6)
        cfg = PipelineConfig(training=TrainConfig(epochs=10))
        a = cross_validate(data, k=4, cfg=cfg, seed=9)
        b = cross_validate(data, k=4, cfg=cfg, seed=9)
        assert a.to_json() == b.to_json()

    def test_missing_class_warns_but_evaluates(self):
        data = make_separable_set(n=37, seed=8)  # uneven counts
        report = cross_validate(data, k=10, cfg=PipelineConfig(training=TrainConfig(epochs=5)), seed=1)
        assert report.confusion.total == 37
        assert any("no test instances" in w for w in report.warnings)

    def test_k_validation(self):
        data = make_separable_set(n=8, seed=1)
        with pytest.raises(ValueError):
            cross_validate(data, k=1)
        with pytest.raises(ValueError):
            cross_validate(data[:3], k=5)


class TestCategoryDistribution:
    def test_table_shape_percentages(self):
        labeled = [P] * 273 + [M] * 269 + [E] * 129 + [O] * 53
        dist = category_distribution(labeled)
        assert dist[P][0] == 273 and round(dist[P][1], 1) == 37.7
        assert dist[M][0] == 269 and round(dist[M][1], 1) == 37.2
        assert dist[E][0] == 129 and round(dist[E][1], 1) == 17.8
        assert dist[O][0] == 53 and round(dist[O][1], 1) == 7.3
        assert sum(v[1] for v in dist.values()) == pytest.approx(100.0)

    def test_empty_input_all_zero(self):
        dist = category_distribution([])
        assert all(v == (0, 0.0) for v in dist.values())

    def test_uniform(self):
        dist = category_distribution([P, M, E, O])
        assert all(v == (1, 25.0) for v in dist.values())
