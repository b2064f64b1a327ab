"""Persistent inverted index over future-work records with three ranking
modes: sentence PageRank, publication year, and citation count.

The PageRank graph links records whose tf-idf cosine similarity over stems
reaches a threshold; scores come from damped power iteration with uniform
teleport, L1-normalized each step so they always sum to one.

On disk an index is a directory:

    records.jsonl   one record per line, ascending record_id
    postings.bin    length-prefixed binary postings (see _write_postings)
    meta.json       build config, corpus fingerprint, counts
"""

from __future__ import annotations

import hashlib
import json
import math
import os
import shutil
import struct
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .records import FutureWorkRecord, read_records, write_records
from .templates import Category
from .text import tokenize_and_stem

INDEX_VERSION = 1

RANK_MODES = ("pagerank", "date", "citations")


class IndexError_(ValueError):
    """Raised for malformed index inputs or queries."""


@dataclass(frozen=True)
class PageRankConfig:
    sim_threshold: float = 0.1
    damping: float = 0.85
    tol: float = 1e-8
    max_iter: int = 100

    def to_dict(self) -> dict:
        return {
            "sim_threshold": self.sim_threshold,
            "damping": self.damping,
            "tol": self.tol,
            "max_iter": self.max_iter,
        }


def _tfidf_vectors(stem_lists: list[tuple[str, ...]]) -> list[dict[str, float]]:
    n = len(stem_lists)
    df: dict[str, int] = {}
    for stems in stem_lists:
        for s in set(stems):
            df[s] = df.get(s, 0) + 1
    idf = {s: math.log((1 + n) / (1 + d)) + 1.0 for s, d in df.items()}
    vectors = []
    for stems in stem_lists:
        tf: dict[str, int] = {}
        for s in stems:
            tf[s] = tf.get(s, 0) + 1
        vec = {s: c * idf[s] for s, c in tf.items()}
        norm = math.sqrt(sum(v * v for v in vec.values()))
        if norm > 0:
            vec = {s: v / norm for s, v in vec.items()}
        vectors.append(vec)
    return vectors


def _cosine(a: dict[str, float], b: dict[str, float]) -> float:
    if len(b) < len(a):
        a, b = b, a
    return sum(v * b.get(s, 0.0) for s, v in a.items())


def pagerank_scores(
    n: int,
    edges: list[tuple[int, int, float]],
    damping: float = 0.85,
    tol: float = 1e-8,
    max_iter: int = 100,
) -> np.ndarray:
    """Damped power iteration over an undirected weighted graph.

    Each step computes (1-d)/n + d * (incoming weighted rank) and then
    L1-normalizes, so isolated nodes keep teleport-only mass and the
    scores sum to one.
    """
    if n <= 0:
        raise IndexError_("graph must have at least one node")
    # zero-weight edges carry no rank and would zero-divide below
    edges = [(u, v, w) for u, v, w in edges if w > 0]
    out_weight = np.zeros(n)
    for u, v, w in edges:
        out_weight[u] += w
        out_weight[v] += w

    rank = np.full(n, 1.0 / n)
    for _ in range(max_iter):
        incoming = np.zeros(n)
        for u, v, w in edges:
            incoming[v] += rank[u] * w / out_weight[u]
            incoming[u] += rank[v] * w / out_weight[v]
        new = (1.0 - damping) / n + damping * incoming
        new /= new.sum()
        delta = float(np.abs(new - rank).sum())
        rank = new
        if delta < tol:
            break
    return rank


def compute_pagerank(
    records: list[FutureWorkRecord], cfg: PageRankConfig | None = None
) -> dict[int, float]:
    """Similarity-graph PageRank score per record_id."""
    if not records:
        raise IndexError_("records must be non-empty")
    cfg = cfg or PageRankConfig()
    if len(records) == 1:
        return {records[0].record_id: 1.0}

    vectors = _tfidf_vectors([r.stems for r in records])
    edges = []
    for i in range(len(records)):
        for j in range(i + 1, len(records)):
            sim = _cosine(vectors[i], vectors[j])
            if sim >= cfg.sim_threshold:
                edges.append((i, j, sim))
    scores = pagerank_scores(len(records), edges, cfg.damping, cfg.tol, cfg.max_iter)
    return {rec.record_id: float(scores[i]) for i, rec in enumerate(records)}


@dataclass(frozen=True)
class Query:
    text: str = ""
    domain: str | None = None
    category: Category | None = None
    rank: str = "pagerank"
    limit: int = 10
    offset: int = 0

    def __post_init__(self) -> None:
        if self.rank not in RANK_MODES:
            raise IndexError_(f"unknown rank {self.rank!r}; valid: {', '.join(RANK_MODES)}")
        if self.limit < 1:
            raise IndexError_("limit must be >= 1")
        if self.offset < 0:
            raise IndexError_("offset must be >= 0")


def parse_category(value: str) -> Category:
    try:
        return Category(value)
    except ValueError:
        valid = ", ".join(c.value for c in Category)
        raise IndexError_(f"unknown category {value!r}; valid: {valid}") from None


@dataclass(frozen=True)
class Index:
    records: dict[int, FutureWorkRecord]
    postings: dict[str, tuple[int, ...]]
    meta: dict = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.records)

    def domains(self) -> list[str]:
        return sorted({d for rec in self.records.values() for d in rec.domains})


def build_index(
    records: list[FutureWorkRecord], pagerank_cfg: PageRankConfig | None = None
) -> Index:
    """Compute PageRank, build postings, and assemble an immutable index."""
    pagerank_cfg = pagerank_cfg or PageRankConfig()
    ids = [r.record_id for r in records]
    if len(ids) != len(set(ids)):
        dupes = sorted({i for i in ids if ids.count(i) > 1})
        raise IndexError_(f"duplicate record_id values: {dupes}")

    if records:
        scores = compute_pagerank(records, pagerank_cfg)
        records = [r.with_pagerank(scores[r.record_id]) for r in records]

    postings: dict[str, set[int]] = {}
    for rec in records:
        for s in set(rec.stems):
            postings.setdefault(s, set()).add(rec.record_id)

    fingerprint = hashlib.sha256(
        "\n".join(
            json.dumps(r.to_dict(), sort_keys=True) for r in sorted(records, key=lambda r: r.record_id)
        ).encode("utf-8")
    ).hexdigest()
    meta = {
        "version": INDEX_VERSION,
        "pagerank": pagerank_cfg.to_dict(),
        "corpus_fingerprint": fingerprint,
        "record_count": len(records),
        "stem_count": len(postings),
    }
    return Index(
        records={r.record_id: r for r in records},
        postings={s: tuple(sorted(ids_)) for s, ids_ in postings.items()},
        meta=meta,
    )


_RANK_SCORE = {
    "pagerank": lambda r: r.pagerank,
    "date": lambda r: float(r.year),
    "citations": lambda r: float(r.citation_count),
}


def search(index: Index, q: Query) -> tuple[int, list[tuple[FutureWorkRecord, float]]]:
    """Conjunctive stem search with filters, ranking and paging.

    Returns the total match count and the requested page as
    (record, rank score) pairs.
    """
    _, terms = tokenize_and_stem(q.text or "")
    if terms:
        candidate_ids: set[int] | None = None
        for term in terms:
            ids = set(index.postings.get(term, ()))
            candidate_ids = ids if candidate_ids is None else candidate_ids & ids
            if not candidate_ids:
                break
        candidates = [index.records[i] for i in sorted(candidate_ids or ())]
    else:
        candidates = [index.records[i] for i in sorted(index.records)]

    if q.domain is not None:
        candidates = [r for r in candidates if q.domain in r.domains]
    if q.category is not None:
        candidates = [r for r in candidates if r.final_category is q.category]

    score = _RANK_SCORE[q.rank]
    candidates.sort(key=lambda r: (-score(r), r.record_id))
    total = len(candidates)
    page = candidates[q.offset : q.offset + q.limit]
    return total, [(r, score(r)) for r in page]


def _write_postings(postings: dict[str, tuple[int, ...]], path: Path) -> None:
    """Binary layout: u32 stem count; per stem (lexicographic order):
    u32 byte length, UTF-8 stem bytes, u32 id count, u32 ids
    (first absolute, then deltas).  All integers little-endian."""
    with open(path, "wb") as fh:
        fh.write(struct.pack("<I", len(postings)))
        for s in sorted(postings):
            raw = s.encode("utf-8")
            ids = postings[s]
            fh.write(struct.pack("<I", len(raw)))
            fh.write(raw)
            fh.write(struct.pack("<I", len(ids)))
            prev = 0
            for i, rid in enumerate(ids):
                fh.write(struct.pack("<I", rid if i == 0 else rid - prev))
                prev = rid


def _read_postings(path: Path) -> dict[str, tuple[int, ...]]:
    postings: dict[str, tuple[int, ...]] = {}
    data = path.read_bytes()
    pos = 0

    def read_u32() -> int:
        nonlocal pos
        (value,) = struct.unpack_from("<I", data, pos)
        pos += 4
        return value

    stem_count = read_u32()
    for _ in range(stem_count):
        length = read_u32()
        s = data[pos : pos + length].decode("utf-8")
        pos += length
        id_count = read_u32()
        ids = []
        current = 0
        for i in range(id_count):
            delta = read_u32()
            current = delta if i == 0 else current + delta
            ids.append(current)
        postings[s] = tuple(ids)
    return postings


def save_index(index: Index, directory: str | Path) -> None:
    """Persist atomically: build a sibling temp directory, then swap."""
    target = Path(directory)
    target.parent.mkdir(parents=True, exist_ok=True)
    tmp = Path(tempfile.mkdtemp(prefix=f".{target.name}-", dir=target.parent))
    try:
        records = [index.records[i] for i in sorted(index.records)]
        write_records(records, tmp / "records.jsonl")
        _write_postings(index.postings, tmp / "postings.bin")
        (tmp / "meta.json").write_text(
            json.dumps(index.meta, sort_keys=True, indent=2) + "\n", encoding="utf-8"
        )
        if target.exists():
            backup = target.parent / f".{target.name}-old"
            if backup.exists():
                shutil.rmtree(backup)
            os.rename(target, backup)
            os.rename(tmp, target)
            shutil.rmtree(backup)
        else:
            os.rename(tmp, target)
    finally:
        if tmp.exists():
            shutil.rmtree(tmp, ignore_errors=True)


def load_index(directory: str | Path) -> Index:
    d = Path(directory)
    records = read_records(d / "records.jsonl")
    postings = _read_postings(d / "postings.bin")
    meta = json.loads((d / "meta.json").read_text(encoding="utf-8"))
    if meta.get("version") != INDEX_VERSION:
        raise IndexError_(f"unsupported index version {meta.get('version')!r}")
    return Index(records={r.record_id: r for r in records}, postings=postings, meta=meta)
