"""Figure rendering for the analyze report path.

Writes PNG bar charts next to the delimited output: one category
distribution chart across domains and one top-phrase chart per domain.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .analysis import DomainStats, PhraseEntry
from .templates import CATEGORY_ORDER

_CATEGORY_COLORS = ("#4c72b0", "#dd8452", "#55a868", "#c44e52")


def render_category_distribution(stats: list[DomainStats], path: str | Path) -> None:
    """Grouped bars: per-domain category percentages."""
    fig, ax = plt.subplots(figsize=(max(6.0, 1.8 * len(stats)), 4.0))
    width = 0.2
    for ci, cat in enumerate(CATEGORY_ORDER):
        xs = [di + (ci - 1.5) * width for di in range(len(stats))]
        ys = [s.category_percentages[cat] for s in stats]
        ax.bar(xs, ys, width=width, label=cat.value, color=_CATEGORY_COLORS[ci])
    ax.set_xticks(range(len(stats)))
    ax.set_xticklabels([s.domain for s in stats], rotation=15, ha="right")
    ax.set_ylabel("share of future-work sentences (%)")
    ax.set_title("Category distribution per domain")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_phrase_bars(
    entries: list[PhraseEntry], title: str, path: str | Path, top_n: int = 15
) -> None:
    """Horizontal bars for the most frequent phrases of one scope."""
    top = entries[:top_n]
    if not top:
        return
    fig, ax = plt.subplots(figsize=(7.0, max(2.0, 0.35 * len(top) + 1.0)))
    ys = range(len(top))
    ax.barh(ys, [e.count for e in top], color="#4c72b0")
    ax.set_yticks(ys)
    ax.set_yticklabels([e.phrase for e in top])
    ax.invert_yaxis()
    ax.set_xlabel("occurrences")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
