"""Micro/macro precision, recall and F-measure, confusion matrices, and a
stratified k-fold cross-validation harness for the sentence classifier.

Macro averages always divide by the fixed class count (4), including empty
classes; every 0/0 ratio is 0 and flagged in the report.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .classifier import FeatureConfig, TrainConfig, apply_threshold, predict, train, vectorize
from .corpus import Sentence
from .features import fit_feature_space
from .templates import CATEGORY_ORDER, Category
from .text import StopwordLists

K_CLASSES = len(CATEGORY_ORDER)


@dataclass(frozen=True)
class Confusion:
    """counts[gold][predicted] over the canonical category order."""

    counts: tuple[tuple[int, ...], ...]

    @classmethod
    def from_pairs(cls, pairs: list[tuple[Category, Category]]) -> "Confusion":
        m = [[0] * K_CLASSES for _ in range(K_CLASSES)]
        for gold, predicted in pairs:
            m[CATEGORY_ORDER.index(gold)][CATEGORY_ORDER.index(predicted)] += 1
        return cls(counts=tuple(tuple(row) for row in m))

    @property
    def total(self) -> int:
        return sum(sum(row) for row in self.counts)

    def gold_count(self, i: int) -> int:
        return sum(self.counts[i])

    def proposed_count(self, i: int) -> int:
        return sum(row[i] for row in self.counts)

    def correct_count(self, i: int) -> int:
        return self.counts[i][i]


def _ratio(num: float, den: float) -> float:
    return num / den if den else 0.0


def _f(p: float, r: float) -> float:
    return 2 * p * r / (p + r) if p + r else 0.0


@dataclass(frozen=True)
class EvalReport:
    per_class: dict[Category, tuple[float, float, float]]
    micro: tuple[float, float, float]
    macro: tuple[float, float, float]
    confusion: Confusion
    zero_division_classes: tuple[str, ...] = ()
    warnings: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "per_class": {
                c.value: {"precision": v[0], "recall": v[1], "f_measure": v[2]}
                for c, v in self.per_class.items()
            },
            "micro": {"precision": self.micro[0], "recall": self.micro[1], "f_measure": self.micro[2]},
            "macro": {"precision": self.macro[0], "recall": self.macro[1], "f_measure": self.macro[2]},
            "confusion": [list(row) for row in self.confusion.counts],
            "zero_division_classes": list(self.zero_division_classes),
            "warnings": list(self.warnings),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


def format_report_table(report: EvalReport, label: str = "Result") -> str:
    """Aligned text table: micro and macro P/R/F columns."""
    header = (
        f"{'':16s}{'Micro average':>33s}{'Macro average':>33s}\n"
        f"{'Method':16s}"
        f"{'Precision':>11s}{'Recall':>11s}{'F-measure':>11s}"
        f"{'Precision':>11s}{'Recall':>11s}{'F-measure':>11s}"
    )
    mi, ma = report.micro, report.macro
    row = (
        f"{label:16s}"
        f"{mi[0]:>11.4f}{mi[1]:>11.4f}{mi[2]:>11.4f}"
        f"{ma[0]:>11.4f}{ma[1]:>11.4f}{ma[2]:>11.4f}"
    )
    return f"{header}\n{row}"


def report_from_confusion(confusion: Confusion, warnings: tuple[str, ...] = ()) -> EvalReport:
    per_class = {}
    zero_div = []
    for i, cat in enumerate(CATEGORY_ORDER):
        proposed = confusion.proposed_count(i)
        gold = confusion.gold_count(i)
        correct = confusion.correct_count(i)
        if proposed == 0 or gold == 0:
            zero_div.append(cat.value)
        p = _ratio(correct, proposed)
        r = _ratio(correct, gold)
        per_class[cat] = (p, r, _f(p, r))

    total_correct = sum(confusion.correct_count(i) for i in range(K_CLASSES))
    total_proposed = sum(confusion.proposed_count(i) for i in range(K_CLASSES))
    total_gold = sum(confusion.gold_count(i) for i in range(K_CLASSES))
    micro_p = _ratio(total_correct, total_proposed)
    micro_r = _ratio(total_correct, total_gold)

    macro_p = sum(v[0] for v in per_class.values()) / K_CLASSES
    macro_r = sum(v[1] for v in per_class.values()) / K_CLASSES

    return EvalReport(
        per_class=per_class,
        micro=(micro_p, micro_r, _f(micro_p, micro_r)),
        macro=(macro_p, macro_r, _f(macro_p, macro_r)),
        confusion=confusion,
        zero_division_classes=tuple(zero_div),
        warnings=warnings,
    )


def compute_report(pairs: list[tuple[Category, Category]]) -> EvalReport:
    """Evaluate (gold, predicted) pairs with the six micro/macro formulas."""
    if not pairs:
        raise ValueError("pairs must be non-empty")
    return report_from_confusion(Confusion.from_pairs(pairs))


def stratified_fold_assignment(
    labels: list[Category], k: int, seed: int
) -> list[int]:
    """Fold index per instance: per-class round-robin after seeded shuffle."""
    rng = np.random.default_rng(seed)
    assignment = [0] * len(labels)
    # per-class fold offsets are staggered so remainders spread over folds
    for offset, cat in enumerate(CATEGORY_ORDER):
        idx = [i for i, c in enumerate(labels) if c is cat]
        perm = rng.permutation(len(idx))
        for j, p in enumerate(perm):
            assignment[idx[int(p)]] = (j + offset) % k
    return assignment


@dataclass(frozen=True)
class PipelineConfig:
    features: FeatureConfig = field(default_factory=FeatureConfig)
    training: TrainConfig = field(default_factory=TrainConfig)
    #: Threshold applied to predictions before scoring; 0 keeps the raw
    #: argmax assignment (the comparison-table setting).
    eval_tau: float = 0.0


def _average_reports(reports: list[EvalReport], warnings: list[str]) -> EvalReport:
    n = len(reports)
    per_class = {
        cat: tuple(
            sum(r.per_class[cat][j] for r in reports) / n for j in range(3)
        )
        for cat in CATEGORY_ORDER
    }
    micro = tuple(sum(r.micro[j] for r in reports) / n for j in range(3))
    macro = tuple(sum(r.macro[j] for r in reports) / n for j in range(3))
    summed = [
        [sum(r.confusion.counts[i][j] for r in reports) for j in range(K_CLASSES)]
        for i in range(K_CLASSES)
    ]
    zero_div = sorted({c for r in reports for c in r.zero_division_classes})
    return EvalReport(
        per_class=per_class,
        micro=micro,  # type: ignore[arg-type]
        macro=macro,  # type: ignore[arg-type]
        confusion=Confusion(counts=tuple(tuple(row) for row in summed)),
        zero_division_classes=tuple(zero_div),
        warnings=tuple(warnings),
    )


def cross_validate(
    labeled: list[tuple[Sentence, Category]],
    k: int = 5,
    cfg: PipelineConfig | None = None,
    seed: int = 42,
    stopwords: StopwordLists | None = None,
    manual_bank=None,
) -> EvalReport:
    """Stratified k-fold cross-validation of the full pipeline.

    The feature space and auto templates are fitted on the training folds
    only; fold metrics are averaged across folds and confusions summed.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if len(labeled) < k:
        raise ValueError("need at least k labeled instances")
    cfg = cfg or PipelineConfig()
    if stopwords is None:
        stopwords = StopwordLists.bundled()

    folds = stratified_fold_assignment([c for _, c in labeled], k, seed)
    reports = []
    warnings: list[str] = []
    for fold in range(k):
        train_set = [lc for lc, f in zip(labeled, folds) if f != fold]
        test_set = [lc for lc, f in zip(labeled, folds) if f == fold]
        missing = [
            cat.value
            for cat in CATEGORY_ORDER
            if not any(c is cat for _, c in test_set)
        ]
        if missing:
            warnings.append(f"fold {fold}: no test instances for {', '.join(missing)}")

        space = fit_feature_space(train_set, cfg.features, stopwords, manual_bank)
        vectors = [(vectorize(s, space), c) for s, c in train_set]
        model = train(vectors, cfg.training, space)
        pairs = []
        for sentence, gold in test_set:
            pred = predict(model, vectorize(sentence, space))
            assigned = apply_threshold(pred.category, pred.confidence, cfg.eval_tau)
            pairs.append((gold, assigned))
        reports.append(compute_report(pairs))
    return _average_reports(reports, warnings)


def category_distribution(
    labeled: list[tuple[Sentence, Category]] | list[Category],
) -> dict[Category, tuple[int, float]]:
    """Counts and percentages per category; all zeros on empty input."""
    cats = [c if isinstance(c, Category) else c[1] for c in labeled]
    total = len(cats)
    out = {}
    for cat in CATEGORY_ORDER:
        n = sum(1 for c in cats if c is cat)
        out[cat] = (n, 100.0 * n / total if total else 0.0)
    return out
