import itertools

import numpy as np
import pytest

from fwminer.classifier import (
    PAIR_ORDER,
    BinaryClassifier,
    PairwiseModel,
    TrainConfig,
    apply_threshold,
    predict,
    predict_sentence,
    train,
    train_pipeline,
)
from fwminer.features import FeatureVector
from fwminer.metrics import cross_validate
from fwminer.synth import make_noisy_set, make_separable_set
from fwminer.templates import CATEGORY_ORDER, Category

P, M, E, O = CATEGORY_ORDER

INDICATOR_DIM = 4


def indicator(cat, extra=()):
    idx = sorted({CATEGORY_ORDER.index(cat)} | set(extra))
    return FeatureVector(indices=tuple(idx), values=tuple(1.0 for _ in idx), dim=INDICATOR_DIM)


def tiny_fixture():
    return [(indicator(c), c) for c in CATEGORY_ORDER for _ in range(3)]


def hand_model(weight_for_pair, tau=0.5):
    classifiers = []
    for pair in PAIR_ORDER:
        w, b = weight_for_pair(pair)
        classifiers.append(
            BinaryClassifier(pair=pair, weights=np.asarray(w, dtype=float), bias=b,
                             calibration=(1.0, 0.0))
        )
    return PairwiseModel(
        classifiers=tuple(classifiers), tau=tau, config=TrainConfig(), dim=INDICATOR_DIM
    )


class TestStructure:
    def test_exactly_six_classifiers(self):
        model = train(tiny_fixture(), TrainConfig(epochs=5))
        assert len(model.classifiers) == 6
        assert len({c.pair for c in model.classifiers}) == 6

    def test_two_classes_one_trained_five_degenerate(self):
        labeled = [(indicator(P), P)] * 3 + [(indicator(M), M)] * 3
        model = train(labeled, TrainConfig(epochs=5))
        degenerate = [c for c in model.classifiers if c.degenerate_winner is not None]
        assert len(degenerate) == 5
        assert len(model.fit_report["degenerate_pairs"]) == 5

    def test_too_few_classes_rejected(self):
        with pytest.raises(ValueError):
            train([(indicator(P), P)] * 4, TrainConfig())

    def test_votes_sum_to_six(self):
        model = train(tiny_fixture(), TrainConfig(epochs=5))
        for fv, _ in tiny_fixture():
            assert sum(predict(model, fv).votes.values()) == 6


class TestSeparableFixture:
    def test_separability_verified_by_exhaustive_search(self):
        # oracle: for each pair an integer weight vector in {-1,0,1}^4 with
        # bias in {-1,0,1} must separate the indicator fixture
        data = tiny_fixture()
        for a, b in PAIR_ORDER:
            pair_data = [(fv, 1 if c is a else -1) for fv, c in data if c in (a, b)]
            found = False
            for w in itertools.product((-1, 0, 1), repeat=INDICATOR_DIM):
                for bias in (-1, 0, 1):
                    if all(
                        y * (sum(w[i] for i in fv.indices) + bias) > 0
                        for fv, y in pair_data
                    ):
                        found = True
                        break
                if found:
                    break
            assert found, f"pair {a}/{b} not separable"

    def test_training_accuracy_is_one(self):
        data = tiny_fixture()
        model = train(data, TrainConfig(epochs=30))
        for fv, cat in data:
            assert predict(model, fv).category is cat

    def test_pipeline_training_accuracy_on_synthetic_sentences(self):
        data = make_separable_set(n=60, seed=5)
        model = train_pipeline(data)
        hits = sum(1 for s, c in data if predict_sentence(model, s).category is c)
        assert hits == len(data)

    def test_cross_validated_micro_f(self):
        data = make_separable_set(n=80, seed=3)
        report = cross_validate(data, k=5, seed=1)
        assert report.micro[2] >= 0.95


class TestPredict:
    def test_hand_set_weights_problem_beats_all(self):
        def weights(pair):
            w = [0.0] * INDICATOR_DIM
            if pair[0] is P:
                w[0] = 1.0
                w[CATEGORY_ORDER.index(pair[1])] = -1.0
            return w, 0.0

        model = hand_model(weights)
        pred = predict(model, indicator(P))
        assert pred.votes == {P: 3, M: 2, E: 1, O: 0}
        assert pred.category is P

    def test_all_zero_weights_tie_break(self):
        model = hand_model(lambda pair: ([0.0] * INDICATOR_DIM, 0.0))
        pred = predict(model, indicator(E))
        assert pred.votes == {P: 3, M: 2, E: 1, O: 0}
        assert pred.category is P

    def test_confidence_in_open_unit_interval(self):
        model = train(tiny_fixture(), TrainConfig(epochs=10))
        for fv, _ in tiny_fixture():
            pred = predict(model, fv)
            assert 0.0 < pred.confidence < 1.0

    def test_low_confidence_reassigned_to_other(self):
        def weights(pair):
            w = [0.0] * INDICATOR_DIM
            if pair[0] is M or pair[1] is M:
                sign = 1.0 if pair[0] is M else -1.0
                w[1] = sign * 0.01  # tiny margins: calibrated p barely above 0.5
            return w, 0.0

        model = hand_model(weights, tau=0.5)
        pred = predict(model, indicator(M))
        assert pred.category is M
        assert pred.confidence < 0.51
        # the winner itself survives tau slightly below its confidence
        assert apply_threshold(pred.category, pred.confidence, 0.9) is O

    def test_final_category_reassignment_in_prediction(self):
        # winner=method with confidence ~0.38 < tau=0.5 -> final "other"
        def weights(pair):
            w = [0.0] * INDICATOR_DIM
            if pair[0] is M or pair[1] is M:
                sign = 1.0 if pair[0] is M else -1.0
                w[1] = sign * 0.01
            return w, 0.0

        model = hand_model(weights, tau=0.5)
        calibrated_down = PairwiseModel(
            classifiers=tuple(
                BinaryClassifier(c.pair, c.weights, c.bias, (1.0, -0.5 if c.pair[0] is M else 0.5))
                for c in model.classifiers
            ),
            tau=0.5,
            config=model.config,
            dim=INDICATOR_DIM,
        )
        pred = predict(calibrated_down, indicator(M))
        assert pred.category is M
        assert pred.confidence < 0.5
        assert pred.final_category is O

    def test_rescaling_leaves_categories_unchanged(self):
        data = make_separable_set(n=40, seed=9)
        model = train_pipeline(data, train_cfg=TrainConfig(epochs=15))
        scaled = PairwiseModel(
            classifiers=tuple(
                BinaryClassifier(
                    pair=c.pair,
                    weights=c.weights * 3.7,
                    bias=c.bias * 3.7,
                    calibration=c.calibration,
                    degenerate_winner=c.degenerate_winner,
                )
                for c in model.classifiers
            ),
            tau=model.tau,
            config=model.config,
            space=model.space,
            dim=model.dim,
        )
        from fwminer.features import vectorize

        for sentence, _ in data:
            fv = vectorize(sentence, model.space)
            a, b = predict(model, fv), predict(scaled, fv)
            assert a.category is b.category
            assert a.votes == b.votes


class TestThreshold:
    def test_above_threshold_kept(self):
        assert apply_threshold(P, 0.9, 0.5) is P

    def test_other_never_reassigned(self):
        assert apply_threshold(O, 0.1, 0.5) is O

    def test_tau_zero_is_identity(self):
        for cat in CATEGORY_ORDER:
            for conf in (0.0, 0.2, 0.999):
                assert apply_threshold(cat, conf, 0.0) is cat

    def test_invalid_tau_rejected(self):
        with pytest.raises(ValueError):
            apply_threshold(P, 0.5, 1.5)

    def test_sweep_counts_non_increasing(self):
        model = train_pipeline(make_noisy_set(n=120, seed=2), train_cfg=TrainConfig(epochs=20))
        held_out = make_noisy_set(n=120, seed=3)
        preds = [predict_sentence(model, s) for s, _ in held_out]
        taus = [0.0, 0.3, 0.4, 0.5, 0.6, 0.7]
        counts = []
        for tau in taus:
            counts.append(
                sum(
                    1
                    for p in preds
                    if apply_threshold(p.category, p.confidence, tau) in CATEGORY_ORDER[:3]
                )
            )
        assert counts == sorted(counts, reverse=True)
        raw = [p.category for p in preds]
        at_zero = [apply_threshold(p.category, p.confidence, 0.0) for p in preds]
        assert raw == at_zero


class TestDeterminismAndSerialization:
    def test_byte_identical_models(self):
        data = make_separable_set(n=48, seed=4)
        a = train_pipeline(data, train_cfg=TrainConfig(seed=42))
        b = train_pipeline(data, train_cfg=TrainConfig(seed=42))
        assert a.to_json() == b.to_json()

    def test_roundtrip_predictions_identical(self):
        data = make_separable_set(n=48, seed=4)
        model = train_pipeline(data, train_cfg=TrainConfig(epochs=10))
        again = PairwiseModel.from_json(model.to_json())
        for sentence, _ in data[:10]:
            x = predict_sentence(model, sentence)
            y = predict_sentence(again, sentence)
            assert (x.category, x.final_category) == (y.category, y.final_category)
            assert x.confidence == pytest.approx(y.confidence, abs=1e-12)

    def test_calibration_orientation(self):
        data = tiny_fixture()
        model = train(data, TrainConfig(epochs=10))
        for clf in model.classifiers:
            assert clf.calibration[0] > 0
