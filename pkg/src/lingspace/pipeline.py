"""End-to-end pipeline: ingest, ratios, post statistics, RIC, figures.

Configuration is one INI document; every output lands in a single directory
and is byte-stable across reruns on unchanged inputs. Sections:

    [corpus]   format (udhr|ted), input (dir), langs (comma list),
               min_chars (optional; 0 for udhr, 1000 for ted by default)
    [ratios]   base, others (comma list), measure (characters|utf8|gbk),
               rescale_lang (optional, default eng when present),
               rescale_limit (default 140)
    [posts]    posts (file), posts_format (jsonl|csv, default by suffix),
               accounts (csv file), min_posts (default 50)
    [ric]      base (default: the ratios base)
    [output]   dir, format (csv|json, default csv)

Relative paths resolve against the config file's directory.
"""

from __future__ import annotations

import configparser
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from .corpus import (
    CorpusFilterPolicy,
    ParallelCorpus,
    load_subtitle_directory,
    load_udhr_directory,
    save_corpus,
)
from .errors import LingspaceError, UsageError
from .langtags import ENG, LanguageTag, parse_language_list, parse_language_tag
from .measures import MEASURES_BY_CLI_NAME
from .microblog import (
    RIC_TABLE_FIELDS,
    STATS_TABLE_FIELDS,
    AccountStats,
    RicResult,
    account_length_stats,
    assign_posts,
    cell_key,
    compute_ric,
    load_accounts,
    load_posts,
    ric_table_row,
    stats_table_row,
)
from .ratios import (
    RATIO_TABLE_FIELDS,
    RatioStats,
    aggregate_ratios,
    describe,
    ratio_table_row,
)
from .svgplot import BoxplotSeries, render_boxplot
from .tables import emit_table

log = logging.getLogger(__name__)

STAGES = ("corpus ingest", "ratios", "posts analyze", "ric", "plot")


@dataclass(frozen=True)
class PipelineConfig:
    corpus_format: str
    corpus_input: Path
    langs: tuple[LanguageTag, ...]
    min_chars: int | None
    ratio_base: LanguageTag
    ratio_others: tuple[LanguageTag, ...]
    measure_name: str
    rescale_lang: LanguageTag | None
    rescale_limit: float
    posts_path: Path
    posts_format: str
    accounts_path: Path
    min_posts: int
    ric_base: LanguageTag
    out_dir: Path
    table_format: str


def load_pipeline_config(path: str | Path) -> PipelineConfig:
    path = Path(path)
    if not path.is_file():
        raise UsageError(f"config file not found: {path}")
    parser = configparser.ConfigParser()
    parser.read(path, encoding="utf-8")
    base_dir = path.parent

    def need(section: str, key: str) -> str:
        if not parser.has_option(section, key):
            raise UsageError(f"config lacks [{section}] {key}")
        return parser.get(section, key)

    def resolve(value: str) -> Path:
        candidate = Path(value)
        return candidate if candidate.is_absolute() else base_dir / candidate

    corpus_format = need("corpus", "format").strip()
    if corpus_format not in ("udhr", "ted"):
        raise UsageError(f"[corpus] format must be udhr or ted, got {corpus_format!r}")
    langs = parse_language_list(need("corpus", "langs"))
    min_chars = None
    if parser.has_option("corpus", "min_chars"):
        min_chars = parser.getint("corpus", "min_chars")

    ratio_base = parse_language_tag(need("ratios", "base").strip())
    ratio_others = parse_language_list(need("ratios", "others"))
    measure_name = parser.get("ratios", "measure", fallback="characters").strip()
    if measure_name not in MEASURES_BY_CLI_NAME:
        raise UsageError(
            f"[ratios] measure must be one of "
            f"{', '.join(MEASURES_BY_CLI_NAME)}, got {measure_name!r}"
        )
    rescale_raw = parser.get(
        "ratios", "rescale_lang", fallback=ENG if ENG in ratio_others else ""
    ).strip()
    rescale_lang: LanguageTag | None = None
    if rescale_raw:
        rescale_lang = parse_language_tag(rescale_raw)
        if rescale_lang not in ratio_others:
            raise UsageError(
                f"[ratios] rescale_lang {rescale_lang} is not among others"
            )
    rescale_limit = parser.getfloat("ratios", "rescale_limit", fallback=140.0)

    posts_path = resolve(need("posts", "posts"))
    posts_format = parser.get(
        "posts",
        "posts_format",
        fallback="csv" if posts_path.suffix.lower() == ".csv" else "jsonl",
    ).strip()
    accounts_path = resolve(need("posts", "accounts"))
    min_posts = parser.getint("posts", "min_posts", fallback=50)

    ric_base = parse_language_tag(
        parser.get("ric", "base", fallback=ratio_base).strip()
    )

    out_dir = resolve(need("output", "dir"))
    table_format = parser.get("output", "format", fallback="csv").strip()
    if table_format not in ("csv", "json"):
        raise UsageError(
            f"[output] format must be csv or json, got {table_format!r}"
        )

    return PipelineConfig(
        corpus_format=corpus_format,
        corpus_input=resolve(need("corpus", "input")),
        langs=langs,
        min_chars=min_chars,
        ratio_base=ratio_base,
        ratio_others=ratio_others,
        measure_name=measure_name,
        rescale_lang=rescale_lang,
        rescale_limit=rescale_limit,
        posts_path=posts_path,
        posts_format=posts_format,
        accounts_path=accounts_path,
        min_posts=min_posts,
        ric_base=ric_base,
        out_dir=out_dir,
        table_format=table_format,
    )


def default_min_chars(corpus_format: str) -> int:
    """Ingest length filter default: declarations keep everything, talk
    corpora drop degenerate transcripts."""
    return 0 if corpus_format == "udhr" else 1000


def ingest_corpus(
    corpus_format: str,
    input_dir: str | Path,
    langs: tuple[LanguageTag, ...],
    min_chars: int | None,
):
    if min_chars is None:
        min_chars = default_min_chars(corpus_format)
    policy = CorpusFilterPolicy(min_length_chars=min_chars)
    if corpus_format == "udhr":
        return load_udhr_directory(input_dir, langs, policy)
    return load_subtitle_directory(input_dir, langs, policy)


def run_pipeline(config_path: str | Path) -> int:
    """Run every stage; returns 0 on success, 1 naming the failed stage."""
    stage = "config"
    try:
        cfg = load_pipeline_config(config_path)
        cfg.out_dir.mkdir(parents=True, exist_ok=True)
        ext = cfg.table_format

        stage = "corpus ingest"
        corpus = _stage_ingest(cfg)

        stage = "ratios"
        ratio_stats = _stage_ratios(cfg, corpus, ext)

        stage = "posts analyze"
        stats_list = _stage_posts(cfg, ext)

        stage = "ric"
        ric_results = _stage_ric(cfg, ratio_stats, stats_list, ext)

        stage = "plot"
        _stage_plots(cfg, ratio_stats, ric_results)
    except (LingspaceError, OSError, configparser.Error) as exc:
        print(f"pipeline failed at stage '{stage}': {exc}", file=sys.stderr)
        return 1
    log.info("pipeline finished; outputs in %s", cfg.out_dir)
    return 0


def _stage_ingest(cfg: PipelineConfig) -> ParallelCorpus:
    corpus, report = ingest_corpus(
        cfg.corpus_format, cfg.corpus_input, cfg.langs, cfg.min_chars
    )
    save_corpus(corpus, cfg.out_dir / "corpus.jsonl")
    log.info(
        "corpus ingest: kept %d of %d units (%d missing languages, %d too short)",
        report.kept,
        report.total_ids,
        report.missing_language,
        report.too_short,
    )
    return corpus


def _stage_ratios(
    cfg: PipelineConfig, corpus: ParallelCorpus, ext: str
) -> dict[LanguageTag, RatioStats]:
    measure = MEASURES_BY_CLI_NAME[cfg.measure_name]
    ratio_stats: dict[LanguageTag, RatioStats] = {}
    rows = []
    for lang in cfg.ratio_others:
        stats = aggregate_ratios(corpus, lang, cfg.ratio_base, measure)
        ratio_stats[lang] = stats
        rows.append(ratio_table_row(stats))
    emit_table(
        rows,
        format=cfg.table_format,
        destination=cfg.out_dir / f"ratios.{ext}",
        fieldnames=RATIO_TABLE_FIELDS,
    )
    return ratio_stats


def _stage_posts(cfg: PipelineConfig, ext: str) -> list[AccountStats]:
    posts = load_posts(cfg.posts_path, cfg.posts_format)
    accounts = load_accounts(cfg.accounts_path)
    assigned, dropped = assign_posts(posts, accounts)
    if dropped:
        log.info("posts analyze: dropped %d unattributable posts", dropped)
    stats_list = []
    for meta in accounts:
        stats = account_length_stats(assigned[meta], meta, cfg.min_posts)
        if stats is None:
            log.info(
                "posts analyze: excluding %s@%s (%s): %d posts (need more than %d)",
                meta.screen_name,
                meta.platform,
                meta.language,
                len(assigned[meta]),
                cfg.min_posts,
            )
            continue
        stats_list.append(stats)
    emit_table(
        [stats_table_row(stats) for stats in stats_list],
        format=cfg.table_format,
        destination=cfg.out_dir / f"stats.{ext}",
        fieldnames=STATS_TABLE_FIELDS,
    )
    return stats_list


def _stage_ric(
    cfg: PipelineConfig,
    ratio_stats: dict[LanguageTag, RatioStats],
    stats_list: list[AccountStats],
    ext: str,
) -> list[RicResult]:
    ratio_means = {
        (stats.lang_b, stats.lang_a): stats.stats.mean
        for stats in ratio_stats.values()
    }
    results = [compute_ric(stats, ratio_means, cfg.ric_base) for stats in stats_list]
    emit_table(
        [ric_table_row(result) for result in results],
        format=cfg.table_format,
        destination=cfg.out_dir / f"ric.{ext}",
        fieldnames=RIC_TABLE_FIELDS,
    )
    return results


def _stage_plots(
    cfg: PipelineConfig,
    ratio_stats: dict[LanguageTag, RatioStats],
    ric_results: list[RicResult],
) -> None:
    scale = None
    if cfg.rescale_lang is not None:
        scale = cfg.rescale_limit / ratio_stats[cfg.rescale_lang].stats.mean
    series = [
        BoxplotSeries(lang, ratio_stats[lang].stats, scale)
        for lang in cfg.ratio_others
    ]
    render_boxplot(
        series,
        f"Space ratio vs {cfg.ratio_base} ({cfg.measure_name})",
        cfg.out_dir / "ratios_box.svg",
        y_label=f"ratio to {cfg.ratio_base}",
        secondary_label=(
            f"chars equivalent to {cfg.rescale_limit:g} {cfg.rescale_lang}"
            if scale is not None
            else ""
        ),
    )

    cells: dict[tuple[str, str, str], list[float]] = {}
    for result in ric_results:
        cells.setdefault(cell_key(result.meta), []).extend(result.per_post_ric)
    if cells:
        ric_series = [
            BoxplotSeries("/".join(key), describe(values))
            for key, values in sorted(cells.items())
        ]
        render_boxplot(
            ric_series,
            f"Relative information content (base {cfg.ric_base})",
            cfg.out_dir / "ric_box.svg",
            y_label=f"{cfg.ric_base}-equivalent characters",
        )
