"""Command-line entry points for the pipeline and the search service.

Subcommands: ingest, extract, mine-templates, train, classify, eval,
analyze, index, serve.  Exit codes: 0 success, 1 validation error,
2 I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import analysis, figures
from .classifier import FeatureConfig, PairwiseModel, TrainConfig, train_pipeline
from .corpus import CorpusError, document_to_dict, load_corpus
from .extraction import PatternError, RegexTiers
from .index import IndexError_, PageRankConfig, build_index, load_index, save_index
from .metrics import PipelineConfig, cross_validate, format_report_table
from .pipeline import (
    build_records,
    ensure_domains,
    extract_from_documents,
    load_labeled,
    read_extraction,
    write_extraction,
)
from .records import read_records, write_records
from .service import ServiceConfig, create_app
from .templates import CATEGORY_ORDER, MiningConfig, mine_templates
from .text import StopwordLists, data_path, load_abbreviations


def _add_stopword_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--stopwords", default=None,
                        help="general stopword list file (default: bundled)")
    parser.add_argument("--fw-stopwords", default=None,
                        help="future-work stopword list file, stemmed (default: bundled)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fwminer",
        description="Mine, classify, analyze and search future-work sentences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="validate a corpus and fill in domains/section kinds")
    p.add_argument("--corpus", required=True, help="input corpus JSONL")
    p.add_argument("--out", required=True, help="normalized corpus JSONL")

    p = sub.add_parser("extract", help="extract future-work sentences")
    p.add_argument("--corpus", required=True)
    p.add_argument("--tiers", default=None, help="directory with tier1/tier2/valueless files")
    p.add_argument("--abbreviations", default=None,
                   help="abbreviation list for sentence splitting (default: bundled)")
    p.add_argument("--out", required=True, help="extraction JSONL")
    _add_stopword_flags(p)

    p = sub.add_parser("mine-templates", help="mine sequential patterns from labeled sentences")
    p.add_argument("--labeled", required=True, help="labeled sentences JSONL")
    p.add_argument("--out", required=True, help="mined patterns JSON")
    p.add_argument("--min-length", type=int, default=2)
    p.add_argument("--min-support", type=int, default=2)
    p.add_argument("--min-words", type=int, default=5)
    p.add_argument("--max-length", type=int, default=6)
    _add_stopword_flags(p)

    p = sub.add_parser("train", help="train the pairwise classification model")
    p.add_argument("--labeled", required=True)
    p.add_argument("--out", required=True, help="model JSON")
    p.add_argument("--min-df", type=int, default=3)
    p.add_argument("--epochs", type=int, default=30)
    p.add_argument("--regularization", type=float, default=0.01)
    p.add_argument("--tau", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=42)
    _add_stopword_flags(p)

    p = sub.add_parser("classify", help="classify extracted sentences into records")
    p.add_argument("--model", required=True)
    p.add_argument("--extracted", required=True, help="extraction JSONL")
    p.add_argument("--corpus", required=True, help="corpus JSONL for paper metadata")
    p.add_argument("--out", required=True, help="records JSONL")

    p = sub.add_parser("eval", help="cross-validate the pipeline on labeled sentences")
    p.add_argument("--labeled", required=True)
    p.add_argument("--folds", type=int, default=5)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--tau", type=float, default=0.0,
                   help="confidence threshold applied before scoring (0 = raw argmax)")
    p.add_argument("--min-df", type=int, default=3)
    p.add_argument("--out", default=None, help="report JSON path")
    _add_stopword_flags(p)

    p = sub.add_parser("analyze", help="corpus statistics, phrase tables and figures")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--records", help="records JSONL")
    src.add_argument("--index", help="index directory")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--top", type=int, default=15, help="phrases per figure")
    p.add_argument("--no-figures", action="store_true")
    p.add_argument("--common-words", default=None,
                   help="common-word list for the single-token phrase filter (default: bundled)")
    _add_stopword_flags(p)

    p = sub.add_parser("index", help="build the search index")
    p.add_argument("--records", required=True)
    p.add_argument("--out", required=True, help="index directory")
    p.add_argument("--sim-threshold", type=float, default=0.1)
    p.add_argument("--damping", type=float, default=0.85)

    p = sub.add_parser("serve", help="serve the search API over HTTP")
    p.add_argument("--index", default=None, help="index directory (env FWMINER_INDEX overrides)")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8080)
    p.add_argument("--cors-origin", default=None)
    p.add_argument("--page-limit-max", type=int, default=100)

    return parser


def _cmd_ingest(args) -> int:
    docs = [ensure_domains(d) for d in load_corpus(args.corpus)]
    with open(args.out, "w", encoding="utf-8") as fh:
        for doc in docs:
            fh.write(json.dumps(document_to_dict(doc), sort_keys=True) + "\n")
    print(f"ingested {len(docs)} documents -> {args.out}")
    return 0


def _load_tiers(path: str | None) -> RegexTiers:
    return RegexTiers.from_dir(path) if path else RegexTiers.bundled()


def _load_stopwords(args) -> StopwordLists | None:
    """None means the bundled defaults; a StopwordLists when overridden."""
    if args.stopwords is None and args.fw_stopwords is None:
        return None
    return StopwordLists.from_files(
        args.stopwords or data_path("stopwords.txt"),
        args.fw_stopwords or data_path("fw_stopwords.txt"),
    )


def _cmd_extract(args) -> int:
    docs = [ensure_domains(d) for d in load_corpus(args.corpus)]
    tiers = _load_tiers(args.tiers)
    abbreviations = load_abbreviations(args.abbreviations) if args.abbreviations else None
    extracted = extract_from_documents(docs, tiers, _load_stopwords(args), abbreviations)
    write_extraction(extracted, args.out)
    print(f"extracted {len(extracted)} sentences from {len(docs)} documents -> {args.out}")
    return 0


def _cmd_mine_templates(args) -> int:
    labeled = load_labeled(args.labeled)
    cfg = MiningConfig(
        min_length=args.min_length,
        min_support=args.min_support,
        min_sentence_words=args.min_words,
        max_length=args.max_length,
    )
    patterns = mine_templates(labeled, cfg, _load_stopwords(args))
    payload = [
        {"stems": list(p.stems), "support": p.support, "category_origin": p.category_origin}
        for p in patterns
    ]
    Path(args.out).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    print(f"mined {len(patterns)} patterns -> {args.out}")
    return 0


def _cmd_train(args) -> int:
    labeled = load_labeled(args.labeled)
    feature_cfg = FeatureConfig(min_unigram_df=args.min_df, min_bigram_df=args.min_df)
    train_cfg = TrainConfig(
        epochs=args.epochs,
        regularization=args.regularization,
        tau=args.tau,
        seed=args.seed,
    )
    model = train_pipeline(labeled, feature_cfg, train_cfg, _load_stopwords(args))
    Path(args.out).write_text(model.to_json() + "\n", encoding="utf-8")
    summary = model.fit_report.get("feature_summary", {})
    print(f"trained on {len(labeled)} sentences; features: {summary} -> {args.out}")
    return 0


def _cmd_classify(args) -> int:
    model = PairwiseModel.from_json(Path(args.model).read_text(encoding="utf-8"))
    sentences = read_extraction(args.extracted)
    docs = {d.id: ensure_domains(d) for d in load_corpus(args.corpus)}
    records = build_records(sentences, model, docs)
    write_records(records, args.out)
    counts = {c.value: 0 for c in CATEGORY_ORDER}
    for rec in records:
        counts[rec.final_category.value] += 1
    print(f"classified {len(records)} sentences {counts} -> {args.out}")
    return 0


def _cmd_eval(args) -> int:
    labeled = load_labeled(args.labeled)
    cfg = PipelineConfig(
        features=FeatureConfig(min_unigram_df=args.min_df, min_bigram_df=args.min_df),
        training=TrainConfig(seed=args.seed),
        eval_tau=args.tau,
    )
    report = cross_validate(labeled, k=args.folds, cfg=cfg, seed=args.seed,
                            stopwords=_load_stopwords(args))
    print(format_report_table(report, label=f"{args.folds}-fold CV"))
    for warning in report.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    if args.out:
        Path(args.out).write_text(report.to_json() + "\n", encoding="utf-8")
        print(f"report -> {args.out}")
    return 0


def _cmd_analyze(args) -> int:
    if args.records:
        records = read_records(args.records)
    else:
        records = [r for _, r in sorted(load_index(args.index).records.items())]
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    stopwords = _load_stopwords(args) or StopwordLists.bundled()
    common = analysis.load_common_words(args.common_words)
    payload = analysis.build_stats_payload(records, stopwords=stopwords, common_words=common)
    (out_dir / "stats.json").write_text(
        json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )

    stats = analysis.corpus_stats(records)
    figure_dir = out_dir / "figures"
    if not args.no_figures:
        figure_dir.mkdir(exist_ok=True)
        if stats:
            figures.render_category_distribution(stats, figure_dir / "category_distribution.png")

    for s in stats:
        table = analysis.phrase_table_by_scope(records, s.domain, None, stopwords, common)
        analysis.write_phrase_csv(table, out_dir / f"phrases_{s.domain}.csv")
        if not args.no_figures:
            figures.render_phrase_bars(
                table, f"Top phrases: {s.domain}", figure_dir / f"phrases_{s.domain}.png", args.top
            )
        for cat in CATEGORY_ORDER:
            scoped = analysis.phrase_table_by_scope(records, s.domain, cat, stopwords, common)
            analysis.write_phrase_csv(scoped, out_dir / f"phrases_{s.domain}_{cat.value}.csv")
    print(f"analysis of {len(records)} records -> {out_dir}")
    return 0


def _cmd_index(args) -> int:
    records = read_records(args.records)
    cfg = PageRankConfig(sim_threshold=args.sim_threshold, damping=args.damping)
    index = build_index(records, cfg)
    save_index(index, args.out)
    print(f"indexed {index.size} records, {len(index.postings)} stems -> {args.out}")
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    index_path = os.environ.get("FWMINER_INDEX") or args.index
    if not index_path:
        print("error: no index given (use --index or FWMINER_INDEX)", file=sys.stderr)
        return 1
    config = ServiceConfig(
        index_path=index_path,
        host=args.host,
        port=args.port,
        cors_origin=args.cors_origin,
        page_limit_max=args.page_limit_max,
    )
    app = create_app(load_index(index_path), config)
    uvicorn.run(app, host=config.host, port=config.port, log_level="info")
    return 0


_COMMANDS = {
    "ingest": _cmd_ingest,
    "extract": _cmd_extract,
    "mine-templates": _cmd_mine_templates,
    "train": _cmd_train,
    "classify": _cmd_classify,
    "eval": _cmd_eval,
    "analyze": _cmd_analyze,
    "index": _cmd_index,
    "serve": _cmd_serve,
}


def cli_dispatch(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses exit code 2 for usage errors; this tool reserves 2
        # for I/O failures.
        return 1 if exc.code == 2 else int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (CorpusError, PatternError, IndexError_, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(cli_dispatch())


if __name__ == "__main__":
    run()
