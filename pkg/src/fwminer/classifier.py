"""One-vs-one multi-class classification with max-vote decision.

One regularized hinge-loss linear classifier per unordered category pair
(six for the four categories), each with a logistic margin-to-probability
calibration fitted on out-of-fold margins.  Prediction takes the majority
vote; winners in the first three categories whose confidence falls below
the threshold are reassigned to "other".
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field

import numpy as np

from .corpus import Sentence
from .features import FeatureConfig, FeatureSpace, FeatureVector, fit_feature_space, vectorize
from .templates import CATEGORY_ORDER, FIRST_THREE, Category, category_rank
from .text import StopwordLists

MODEL_VERSION = 1

#: Canonical unordered pair order for K=4 (six pairs).
PAIR_ORDER: tuple[tuple[Category, Category], ...] = tuple(
    itertools.combinations(CATEGORY_ORDER, 2)
)


@dataclass(frozen=True)
class TrainConfig:
    epochs: int = 30
    regularization: float = 0.01
    learning_rate: float = 1.0
    calibration_folds: int = 3
    seed: int = 42
    tau: float = 0.5

    def to_dict(self) -> dict:
        return {
            "epochs": self.epochs,
            "regularization": self.regularization,
            "learning_rate": self.learning_rate,
            "calibration_folds": self.calibration_folds,
            "seed": self.seed,
            "tau": self.tau,
        }


def _sigmoid(x: float) -> float:
    if x >= 0:
        return 1.0 / (1.0 + math.exp(-x))
    e = math.exp(x)
    return e / (1.0 + e)


def _dot(weights: np.ndarray, fv: FeatureVector) -> float:
    if not fv.indices:
        return 0.0
    return float(weights[np.asarray(fv.indices)] @ np.asarray(fv.values))


@dataclass(frozen=True)
class BinaryClassifier:
    """Linear separator for one category pair; positive margin means the
    lower-ordered category of the pair."""

    pair: tuple[Category, Category]
    weights: np.ndarray
    bias: float
    calibration: tuple[float, float]  # probability of pair[0] = sigmoid(scale * margin + offset)
    degenerate_winner: Category | None = None

    def margin(self, fv: FeatureVector) -> float:
        return _dot(self.weights, fv) + self.bias

    def probability_first(self, fv: FeatureVector) -> float:
        scale, offset = self.calibration
        p = _sigmoid(scale * self.margin(fv) + offset)
        return min(max(p, 1e-9), 1.0 - 1e-9)


@dataclass(frozen=True)
class Prediction:
    category: Category
    confidence: float
    votes: dict[Category, int]
    final_category: Category


def _sgd_hinge(
    data: list[tuple[FeatureVector, int]], dim: int, cfg: TrainConfig, seed: int
) -> tuple[np.ndarray, float]:
    """Deterministic epoch-based subgradient descent on the regularized
    hinge loss; labels are +1/-1."""
    rng = np.random.default_rng(seed)
    w = np.zeros(dim)
    b = 0.0
    lam = cfg.regularization
    t = 0
    for _ in range(cfg.epochs):
        order = rng.permutation(len(data))
        for i in order:
            t += 1
            eta = cfg.learning_rate / (1.0 + cfg.learning_rate * lam * t)
            fv, y = data[i]
            m = y * (_dot(w, fv) + b)
            w *= 1.0 - eta * lam
            if m < 1.0:
                if fv.indices:
                    idx = np.asarray(fv.indices)
                    w[idx] += eta * y * np.asarray(fv.values)
                b += eta * y
    return w, b


def _platt_fit(margins: list[float], labels: list[int]) -> tuple[float, float]:
    """Logistic fit of P(label=+1) = sigmoid(A * margin + B) by Newton
    descent with Platt target smoothing; A is clamped positive."""
    n_pos = sum(1 for y in labels if y > 0)
    n_neg = len(labels) - n_pos
    t_pos = (n_pos + 1.0) / (n_pos + 2.0)
    t_neg = 1.0 / (n_neg + 2.0)
    targets = [t_pos if y > 0 else t_neg for y in labels]

    a = 1.0
    b = 0.0
    for _ in range(100):
        g_a = g_b = 0.0
        h_aa = h_ab = h_bb = 1e-9
        for m, t in zip(margins, targets):
            p = _sigmoid(a * m + b)
            d = p - t
            g_a += d * m
            g_b += d
            s = max(p * (1.0 - p), 1e-12)
            h_aa += s * m * m
            h_ab += s * m
            h_bb += s
        det = h_aa * h_bb - h_ab * h_ab
        if abs(det) < 1e-18:
            break
        da = (h_bb * g_a - h_ab * g_b) / det
        db = (h_aa * g_b - h_ab * g_a) / det
        a -= da
        b -= db
        if abs(da) + abs(db) < 1e-10:
            break
    return max(a, 1e-6), b


def _stratified_folds(labels: list[int], k: int, rng: np.random.Generator) -> list[int]:
    """Fold id per example: per-class round-robin after a seeded shuffle."""
    assignment = [0] * len(labels)
    for cls in (1, -1):
        idx = [i for i, y in enumerate(labels) if y == cls]
        perm = rng.permutation(len(idx))
        for j, p in enumerate(perm):
            assignment[idx[int(p)]] = j % k
    return assignment


def _train_pair(
    pair: tuple[Category, Category],
    labeled: list[tuple[FeatureVector, Category]],
    dim: int,
    cfg: TrainConfig,
    pair_seed: int,
) -> BinaryClassifier:
    data = [
        (fv, 1 if cat is pair[0] else -1)
        for fv, cat in labeled
        if cat is pair[0] or cat is pair[1]
    ]
    labels = [y for _, y in data]
    if 1 not in labels or -1 not in labels:
        winner = pair[0] if 1 in labels else pair[1]
        bias = 1.0 if winner is pair[0] else -1.0
        return BinaryClassifier(
            pair=pair,
            weights=np.zeros(dim),
            bias=bias,
            calibration=(4.0, 0.0),
            degenerate_winner=winner,
        )

    # Out-of-fold margins for calibration.
    oof: list[tuple[float, int]] = []
    k = cfg.calibration_folds
    if len(data) >= k:
        rng = np.random.default_rng(pair_seed + 1)
        folds = _stratified_folds(labels, k, rng)
        for fold in range(k):
            train_part = [d for d, f in zip(data, folds) if f != fold]
            held = [d for d, f in zip(data, folds) if f == fold]
            if not train_part or not held:
                continue
            w, b = _sgd_hinge(train_part, dim, cfg, pair_seed + 100 + fold)
            for fv, y in held:
                oof.append((float(w[np.asarray(fv.indices)] @ np.asarray(fv.values)) + b
                            if fv.indices else b, y))

    w, b = _sgd_hinge(data, dim, cfg, pair_seed)
    if not oof:  # tiny pair: calibrate on training margins
        oof = [(_dot(w, fv) + b, y) for fv, y in data]
    scale, offset = _platt_fit([m for m, _ in oof], [y for _, y in oof])
    return BinaryClassifier(pair=pair, weights=w, bias=b, calibration=(scale, offset))


@dataclass(frozen=True)
class PairwiseModel:
    classifiers: tuple[BinaryClassifier, ...]
    tau: float
    config: TrainConfig
    space: FeatureSpace | None = None
    dim: int = 0
    fit_report: dict = field(default_factory=dict)

    @property
    def k(self) -> int:
        return len(CATEGORY_ORDER)

    def to_json(self) -> str:
        payload = {
            "version": MODEL_VERSION,
            "tau": self.tau,
            "dim": self.dim,
            "train_config": self.config.to_dict(),
            "space": json.loads(self.space.to_json()) if self.space is not None else None,
            "classifiers": [
                {
                    "pair": [c.pair[0].value, c.pair[1].value],
                    "weights": [[int(i), float(w)] for i, w in enumerate(c.weights) if w != 0.0],
                    "bias": float(c.bias),
                    "calibration": [float(c.calibration[0]), float(c.calibration[1])],
                    "degenerate_winner": c.degenerate_winner.value if c.degenerate_winner else None,
                }
                for c in self.classifiers
            ],
            "fit_report": self.fit_report,
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "PairwiseModel":
        obj = json.loads(text)
        if obj.get("version") != MODEL_VERSION:
            raise ValueError(f"unsupported model version {obj.get('version')!r}")
        space = None
        if obj.get("space") is not None:
            space = FeatureSpace.from_json(json.dumps(obj["space"]))
        dim = obj["dim"]
        classifiers = []
        for c in obj["classifiers"]:
            w = np.zeros(dim)
            for i, v in c["weights"]:
                w[i] = v
            classifiers.append(
                BinaryClassifier(
                    pair=(Category(c["pair"][0]), Category(c["pair"][1])),
                    weights=w,
                    bias=c["bias"],
                    calibration=(c["calibration"][0], c["calibration"][1]),
                    degenerate_winner=(
                        Category(c["degenerate_winner"]) if c["degenerate_winner"] else None
                    ),
                )
            )
        cfg_obj = obj["train_config"]
        return cls(
            classifiers=tuple(classifiers),
            tau=obj["tau"],
            config=TrainConfig(**cfg_obj),
            space=space,
            dim=dim,
            fit_report=obj.get("fit_report", {}),
        )


def train(
    labeled: list[tuple[FeatureVector, Category]],
    cfg: TrainConfig | None = None,
    space: FeatureSpace | None = None,
) -> PairwiseModel:
    """Train the six pairwise classifiers plus calibrations."""
    cfg = cfg or TrainConfig()
    counts = {cat: 0 for cat in CATEGORY_ORDER}
    for _, cat in labeled:
        counts[cat] += 1
    populated = [c for c, n in counts.items() if n >= 2]
    if len(populated) < 2:
        raise ValueError("training needs >= 2 categories with >= 2 examples each")

    dim = space.dim if space is not None else max(fv.dim for fv, _ in labeled)
    classifiers = []
    degenerate = []
    for pair_idx, pair in enumerate(PAIR_ORDER):
        clf = _train_pair(pair, labeled, dim, cfg, cfg.seed + 1000 * pair_idx)
        if clf.degenerate_winner is not None:
            degenerate.append([pair[0].value, pair[1].value, clf.degenerate_winner.value])
        classifiers.append(clf)

    report = {
        "examples": len(labeled),
        "class_counts": {c.value: counts[c] for c in CATEGORY_ORDER},
        "degenerate_pairs": degenerate,
    }
    if space is not None:
        report["feature_summary"] = space.summary()
    return PairwiseModel(
        classifiers=tuple(classifiers),
        tau=cfg.tau,
        config=cfg,
        space=space,
        dim=dim,
        fit_report=report,
    )


def apply_threshold(category: Category, confidence: float, tau: float) -> Category:
    """Reassign low-confidence first-three-category wins to "other"."""
    if not 0.0 <= tau <= 1.0:
        raise ValueError("tau must be in [0, 1]")
    if category in FIRST_THREE and confidence < tau:
        return Category.OTHER
    return category


def predict(model: PairwiseModel, fv: FeatureVector) -> Prediction:
    """Max-vote over the six pairwise decisions.

    Vote ties break toward the greatest summed calibrated probability over
    the tied category's contests, then canonical category order.  The
    confidence is the mean probability that the winner beats each opponent.
    """
    votes = {cat: 0 for cat in CATEGORY_ORDER}
    prob_sum = {cat: 0.0 for cat in CATEGORY_ORDER}
    prob_against: dict[Category, dict[Category, float]] = {
        cat: {} for cat in CATEGORY_ORDER
    }
    for clf in model.classifiers:
        a, b = clf.pair
        p_a = clf.probability_first(fv)
        m = clf.margin(fv)
        winner = a if m > 0 or (m == 0 and category_rank(a) < category_rank(b)) else b
        votes[winner] += 1
        prob_sum[a] += p_a
        prob_sum[b] += 1.0 - p_a
        prob_against[a][b] = p_a
        prob_against[b][a] = 1.0 - p_a

    best = max(
        CATEGORY_ORDER,
        key=lambda c: (votes[c], prob_sum[c], -category_rank(c)),
    )
    opponents = [c for c in CATEGORY_ORDER if c is not best]
    confidence = sum(prob_against[best][o] for o in opponents) / len(opponents)
    final = apply_threshold(best, confidence, model.tau)
    return Prediction(category=best, confidence=confidence, votes=votes, final_category=final)


def train_pipeline(
    labeled_sentences: list[tuple[Sentence, Category]],
    feature_cfg: FeatureConfig | None = None,
    train_cfg: TrainConfig | None = None,
    stopwords: StopwordLists | None = None,
    manual_bank=None,
) -> PairwiseModel:
    """Fit the feature space on the labeled sentences, then train."""
    space = fit_feature_space(labeled_sentences, feature_cfg, stopwords, manual_bank)
    vectors = [(vectorize(s, space), c) for s, c in labeled_sentences]
    return train(vectors, train_cfg, space)


def predict_sentence(model: PairwiseModel, sentence: Sentence) -> Prediction:
    if model.space is None:
        raise ValueError("model carries no feature space")
    return predict(model, vectorize(sentence, model.space))
