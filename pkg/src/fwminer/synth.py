"""Synthetic labeled sentence sets for classifier verification.

The separable set marks every sentence with a category-unique token, so a
linear model with unigram features can reach perfect accuracy.  The noisy
set drops or contaminates markers to spread prediction confidence.
"""

from __future__ import annotations

import numpy as np

from .corpus import Sentence, sentence_from_text
from .templates import CATEGORY_ORDER, Category

_MARKERS = {
    Category.PROBLEM: "alphamark",
    Category.METHOD: "bravomark",
    Category.EVALUATION: "charliemark",
    Category.OTHER: "deltamark",
}

_NOISE_POOL = [f"filler{i:02d}" for i in range(30)]


def _build(words: list[str], idx: int, cat: Category) -> tuple[Sentence, Category]:
    text = " ".join(words)
    return sentence_from_text(text, doc_id=f"synth-{idx}", sentence_index=idx), cat


def make_separable_set(
    n: int = 200, seed: int = 7, words_per_sentence: int = 8
) -> list[tuple[Sentence, Category]]:
    """n instances, evenly spread over the four categories, each carrying
    its category marker plus random filler words."""
    rng = np.random.default_rng(seed)
    out = []
    for i in range(n):
        cat = CATEGORY_ORDER[i % len(CATEGORY_ORDER)]
        noise = [
            _NOISE_POOL[int(j)]
            for j in rng.integers(0, len(_NOISE_POOL), size=words_per_sentence - 1)
        ]
        words = noise + [_MARKERS[cat]]
        order = rng.permutation(len(words))
        out.append(_build([words[int(k)] for k in order], i, cat))
    return out


def make_noisy_set(
    n: int = 200,
    seed: int = 11,
    drop_marker: float = 0.3,
    conflict_marker: float = 0.15,
    mislabel: float = 0.15,
    words_per_sentence: int = 8,
) -> list[tuple[Sentence, Category]]:
    """Like the separable set, but degraded three ways: some sentences lose
    their marker, some gain a competing marker, and some carry only a wrong
    marker.  The mislabeled fraction forces large-margin calibration errors,
    so prediction confidence genuinely spreads below 1."""
    rng = np.random.default_rng(seed)
    out = []
    for i in range(n):
        cat = CATEGORY_ORDER[i % len(CATEGORY_ORDER)]
        noise = [
            _NOISE_POOL[int(j)]
            for j in rng.integers(0, len(_NOISE_POOL), size=words_per_sentence - 1)
        ]
        words = list(noise)
        others = [c for c in CATEGORY_ORDER if c is not cat]
        roll = rng.random()
        if roll < drop_marker:
            pass  # no marker: the model must guess from filler words
        elif roll < drop_marker + conflict_marker:
            words.append(_MARKERS[cat])
            words.append(_MARKERS[others[int(rng.integers(0, 3))]])
        elif roll < drop_marker + conflict_marker + mislabel:
            words.append(_MARKERS[others[int(rng.integers(0, 3))]])
        else:
            words.append(_MARKERS[cat])
        order = rng.permutation(len(words))
        out.append(_build([words[int(k)] for k in order], i, cat))
    return out
