"""Command-line driver.

Subcommands::

    tagrec preprocess --triples raw.tsv --corpus corpus.tsv --out-dir out/
    tagrec expand     --triples raw.tsv --corpus corpus.tsv --thesaurus syn.tsv
    tagrec recommend  --triples clean_or_raw.tsv --thesaurus syn.tsv --top-n 5
    tagrec pipeline   --triples raw.tsv --corpus corpus.tsv --thesaurus syn.tsv
    tagrec evaluate   --acceptance judged.tsv [--threshold 3.6]

Every output file is UTF-8 TSV or ``key: value`` text with sorted rows.
Exit status is 0 on success, 1 on bad input data and 2 on bad usage.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from tagrec.metrics import acceptance_stats, load_acceptance
from tagrec.model import Corpus, Dataset, SynonymLexicon
from tagrec.preprocess import (
    PreprocessOptions,
    PreprocessReport,
    default_suffix_table,
    load_corpus,
    load_suffix_table,
    preprocess_dataset,
)
from tagrec.recommend import AGGREGATES, DEFAULT_TOP_N, recommend_all, recommendation_lines
from tagrec.semantics import ExpansionReport, expand_synonyms, load_lexicon
from tagrec.similarity import build_similarity_matrix
from tagrec.tsv import InputError, read_triples, triple_lines, write_lines

log = logging.getLogger("tagrec")


class UsageError(Exception):
    pass


@dataclass
class PipelineConfig:
    triples_path: Path
    corpus_path: Path | None = None
    thesaurus_path: Path | None = None
    suffix_path: Path | None = None
    out_dir: Path = Path(".")
    top_n: int = DEFAULT_TOP_N
    aggregate: str = "max"
    enable_spellcheck: bool = True
    enable_stemming: bool = True
    enable_synonyms: bool = True
    dump_matrix: bool = False

    @classmethod
    def from_args(cls, args) -> PipelineConfig:
        return cls(
            triples_path=args.triples,
            corpus_path=args.corpus,
            thesaurus_path=args.thesaurus,
            suffix_path=args.suffixes,
            out_dir=args.out_dir,
            top_n=args.top_n,
            aggregate=args.aggregate,
            enable_spellcheck=not args.no_spellcheck,
            enable_stemming=not args.no_stem,
            enable_synonyms=not args.no_synonyms,
            dump_matrix=getattr(args, "dump_matrix", False),
        )

    def validate(self, need_synonyms: bool) -> None:
        if self.top_n < 1:
            raise UsageError("--top-n must be >= 1")
        if self.enable_spellcheck and self.corpus_path is None:
            raise UsageError("spell checking needs --corpus (or pass --no-spellcheck)")
        if need_synonyms and self.enable_synonyms and self.thesaurus_path is None:
            raise UsageError("synonym expansion needs --thesaurus (or pass --no-synonyms)")
        for path in (self.triples_path, self.corpus_path, self.thesaurus_path, self.suffix_path):
            if path is not None and not Path(path).is_file():
                raise InputError(path, 0, "no such file")


def _load_corpus(cfg: PipelineConfig) -> Corpus:
    return load_corpus(cfg.corpus_path) if cfg.corpus_path else Corpus()


def _preprocess(cfg: PipelineConfig, rows) -> tuple[Dataset, PreprocessReport]:
    table = None
    if cfg.enable_stemming:
        table = load_suffix_table(cfg.suffix_path) if cfg.suffix_path else default_suffix_table()
    options = PreprocessOptions(spellcheck=cfg.enable_spellcheck, stemming=cfg.enable_stemming)
    return preprocess_dataset(rows, _load_corpus(cfg), table=table, options=options)


def _load_dataset(cfg: PipelineConfig, force_raw: bool = False):
    """Dataset from the triples file, preprocessing it when it is raw."""
    kind, items = read_triples(cfg.triples_path)
    if kind == "clean":
        if force_raw:
            raise InputError(cfg.triples_path, 1, "expected raw 3-column triples")
        return Dataset(items), None
    return _preprocess(cfg, items)


def _expand(cfg: PipelineConfig, d: Dataset) -> tuple[Dataset, ExpansionReport]:
    if not cfg.enable_synonyms:
        return d, ExpansionReport(0, len(d))
    lex = load_lexicon(cfg.thesaurus_path) if cfg.thesaurus_path else SynonymLexicon()
    return expand_synonyms(d, lex)


def _write_preprocess(cfg, d, report) -> None:
    write_lines(cfg.out_dir / "triples.tsv", triple_lines(d))
    write_lines(cfg.out_dir / "preprocess_report.txt", report.lines())


def _recommend(cfg: PipelineConfig, d: Dataset, always_dump: bool) -> None:
    if not d.websites():
        raise InputError(cfg.triples_path, 0, "dataset has no websites")
    matrix = build_similarity_matrix(d)
    recs = recommend_all(d, matrix, cfg.top_n, cfg.aggregate)
    if always_dump or cfg.dump_matrix:
        write_lines(cfg.out_dir / "similarity.tsv", matrix.lines())
    write_lines(cfg.out_dir / "recommendations.tsv", recommendation_lines(recs))
    write_lines(
        cfg.out_dir / "summary.txt",
        [
            f"users: {len(d.users())}",
            f"websites: {len(d.websites())}",
            f"tags: {len(d.tags())}",
            f"triples: {len(d)}",
            f"site_pairs: {len(matrix)}",
            f"users_with_recommendations: {sum(1 for r in recs.values() if r)}",
            f"recommendations: {sum(len(r) for r in recs.values())}",
            f"top_n: {cfg.top_n}",
            f"aggregate: {cfg.aggregate}",
        ],
    )


def cmd_preprocess(cfg: PipelineConfig) -> None:
    cfg.validate(need_synonyms=False)
    d, report = _load_dataset(cfg, force_raw=True)
    _write_preprocess(cfg, d, report)


def cmd_expand(cfg: PipelineConfig) -> None:
    cfg.validate(need_synonyms=True)
    d, _ = _load_dataset(cfg)
    expanded, report = _expand(cfg, d)
    write_lines(cfg.out_dir / "expanded.tsv", triple_lines(expanded))
    write_lines(cfg.out_dir / "expansion_report.txt", report.lines())


def cmd_recommend(cfg: PipelineConfig) -> None:
    cfg.validate(need_synonyms=True)
    d, _ = _load_dataset(cfg)
    expanded, report = _expand(cfg, d)
    write_lines(cfg.out_dir / "expansion_report.txt", report.lines())
    _recommend(cfg, expanded, always_dump=False)


def cmd_pipeline(cfg: PipelineConfig) -> None:
    cfg.validate(need_synonyms=True)
    d, report = _load_dataset(cfg, force_raw=True)
    _write_preprocess(cfg, d, report)
    expanded, exp_report = _expand(cfg, d)
    write_lines(cfg.out_dir / "expanded.tsv", triple_lines(expanded))
    write_lines(cfg.out_dir / "expansion_report.txt", exp_report.lines())
    _recommend(cfg, expanded, always_dump=True)


def cmd_evaluate(acceptance_file, top_n: int | None = None, threshold: float | None = None,
                 out_dir: Path | None = None) -> list[str]:
    records = load_acceptance(acceptance_file, presented_default=top_n)
    try:
        stats = acceptance_stats(records, threshold)
    except ValueError as exc:
        raise InputError(acceptance_file, 0, str(exc)) from None
    lines = stats.lines()
    if out_dir is not None:
        write_lines(Path(out_dir) / "evaluation.txt", lines)
    return lines


def _add_pipeline_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--triples", type=Path, required=True, help="user<TAB>url<TAB>tag rows (or cleaned 4-column triples)")
    p.add_argument("--corpus", type=Path, help="word or word<TAB>frequency per line")
    p.add_argument("--thesaurus", type=Path, help="word<TAB>syn1,syn2,... per line")
    p.add_argument("--suffixes", type=Path, help="suffix table, one per line (default: bundled)")
    p.add_argument("--out-dir", type=Path, default=Path("."))
    p.add_argument("--top-n", type=int, default=DEFAULT_TOP_N)
    p.add_argument("--aggregate", choices=AGGREGATES, default="max",
                   help="how a candidate's similarities to a user's sites combine")
    p.add_argument("--no-spellcheck", action="store_true")
    p.add_argument("--no-stem", action="store_true")
    p.add_argument("--no-synonyms", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tagrec", description="Tag-based website recommendation for Turkish bookmarks.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_ in [
        ("preprocess", "clean raw triples"),
        ("expand", "add synonym triples"),
        ("recommend", "expand, score and rank"),
        ("pipeline", "run every stage and dump all intermediate files"),
    ]:
        p = sub.add_parser(name, help=help_)
        _add_pipeline_args(p)
        if name == "recommend":
            p.add_argument("--dump-matrix", action="store_true", help="also write similarity.tsv")

    p = sub.add_parser("evaluate", help="acceptance statistics from user judgements")
    p.add_argument("--acceptance", type=Path, required=True, help="user<TAB>accepted<TAB>presented rows")
    p.add_argument("--top-n", type=int, default=None, help="presented count for rows that omit it")
    p.add_argument("--threshold", type=float, default=None, help="success threshold (default: the mean)")
    p.add_argument("--out-dir", type=Path, default=None)
    return parser


_COMMANDS = {
    "preprocess": cmd_preprocess,
    "expand": cmd_expand,
    "recommend": cmd_recommend,
    "pipeline": cmd_pipeline,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        if args.command == "evaluate":
            for line in cmd_evaluate(args.acceptance, args.top_n, args.threshold, args.out_dir):
                print(line)
        else:
            _COMMANDS[args.command](PipelineConfig.from_args(args))
    except UsageError as exc:
        print(f"tagrec: error: {exc}", file=sys.stderr)
        return 2
    except InputError as exc:
        print(f"tagrec: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"tagrec: {exc.filename}: {exc.strerror}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
