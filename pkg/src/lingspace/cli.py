"""Command-line interface.

Subcommands: corpus ingest, ratios, posts analyze, ric, limit check,
plot box, pipeline run. Table-emitting commands take --out/--format/--quiet;
exit code 2 marks usage errors, 1 data or I/O errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from .corpus import load_corpus, save_corpus
from .errors import DataError, LingspaceError, UsageError
from .langtags import parse_language_list, parse_language_tag
from .limits import PRESETS, check_fit
from .measures import MEASURES_BY_CLI_NAME
from .microblog import (
    RIC_TABLE_FIELDS,
    STATS_TABLE_FIELDS,
    account_length_stats,
    assign_posts,
    cell_key,
    compute_ric,
    load_accounts,
    load_posts,
    ric_table_row,
    stats_from_row,
    stats_table_row,
)
from .pipeline import ingest_corpus, run_pipeline
from .ratios import RATIO_TABLE_FIELDS, aggregate_ratios, describe, ratio_table_row
from .svgplot import BoxplotSeries, render_boxplot
from .tables import emit_table, read_records

log = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    quiet = argparse.ArgumentParser(add_help=False)
    quiet.add_argument(
        "--quiet", action="store_true", help="suppress informational logging"
    )
    table = argparse.ArgumentParser(add_help=False, parents=[quiet])
    table.add_argument(
        "--out", type=Path, default=None, help="output file (default: stdout)"
    )
    table.add_argument(
        "--format", choices=("csv", "json"), default="csv", help="table format"
    )

    parser = argparse.ArgumentParser(
        prog="lingspace",
        description=(
            "Cross-lingual text-length ratios, microblog length analysis, "
            "and platform message-limit models."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    corpus = sub.add_parser("corpus", help="parallel corpus operations")
    corpus_sub = corpus.add_subparsers(dest="subcommand", required=True)
    ingest = corpus_sub.add_parser(
        "ingest", parents=[quiet], help="parse and align a corpus directory"
    )
    ingest.add_argument(
        "--format",
        dest="corpus_format",
        choices=("udhr", "ted"),
        required=True,
        help="input layout: <dir>/<lang>.txt or <dir>/<talk_id>/<lang>.*",
    )
    ingest.add_argument("--input", type=Path, required=True, help="corpus directory")
    ingest.add_argument("--langs", required=True, help="comma-separated language tags")
    ingest.add_argument(
        "--min-chars",
        type=int,
        default=None,
        help="minimum reference-language characters per unit "
        "(default: 0 for udhr, 1000 for ted)",
    )
    ingest.add_argument("--out", type=Path, required=True, help="corpus output file")
    ingest.set_defaults(handler=_cmd_corpus_ingest)

    ratios = sub.add_parser(
        "ratios", parents=[table], help="aggregate space ratios over a corpus"
    )
    ratios.add_argument("--corpus", type=Path, required=True, help="corpus file")
    ratios.add_argument("--base", required=True, help="baseline language tag")
    ratios.add_argument("--others", required=True, help="comma-separated language tags")
    ratios.add_argument(
        "--measure",
        choices=tuple(MEASURES_BY_CLI_NAME),
        default="characters",
        help="space measure",
    )
    ratios.set_defaults(handler=_cmd_ratios)

    posts = sub.add_parser("posts", help="microblog post operations")
    posts_sub = posts.add_subparsers(dest="subcommand", required=True)
    analyze = posts_sub.add_parser(
        "analyze", parents=[table], help="per-account length statistics"
    )
    analyze.add_argument("--posts", type=Path, required=True, help="posts file")
    analyze.add_argument(
        "--posts-format",
        choices=("jsonl", "csv"),
        default=None,
        help="posts file format (default: by suffix)",
    )
    analyze.add_argument(
        "--accounts", type=Path, required=True, help="accounts CSV file"
    )
    analyze.add_argument(
        "--min-posts",
        type=int,
        default=50,
        help="accounts need strictly more posts than this",
    )
    analyze.set_defaults(handler=_cmd_posts_analyze)

    ric = sub.add_parser(
        "ric",
        parents=[table],
        help="relative information content from stats and ratios tables",
    )
    ric.add_argument("--stats", type=Path, required=True, help="stats table")
    ric.add_argument("--ratios", type=Path, required=True, help="ratios table")
    ric.add_argument("--base", required=True, help="baseline language tag")
    ric.set_defaults(handler=_cmd_ric)

    limit = sub.add_parser("limit", help="platform length limits")
    limit_sub = limit.add_subparsers(dest="subcommand", required=True)
    check = limit_sub.add_parser(
        "check", parents=[table], help="check a text against a platform limit"
    )
    check.add_argument(
        "--platform", choices=tuple(PRESETS), required=True, help="limit preset"
    )
    source = check.add_mutually_exclusive_group(required=True)
    source.add_argument("--text", help="text to check")
    source.add_argument(
        "--file", type=Path, help="file whose contents to check (UTF-8)"
    )
    check.set_defaults(handler=_cmd_limit_check)

    plot = sub.add_parser("plot", help="figure rendering")
    plot_sub = plot.add_subparsers(dest="subcommand", required=True)
    box = plot_sub.add_parser(
        "box", parents=[quiet], help="boxplot from a corpus or a RIC table"
    )
    box.add_argument("--corpus", type=Path, help="corpus file (ratio boxplots)")
    box.add_argument("--base", help="baseline language tag (with --corpus)")
    box.add_argument("--others", help="comma-separated language tags (with --corpus)")
    box.add_argument(
        "--measure",
        choices=tuple(MEASURES_BY_CLI_NAME),
        default="characters",
        help="space measure (with --corpus)",
    )
    box.add_argument(
        "--rescale-lang",
        default=None,
        help="language whose mean anchors the secondary axis (with --corpus)",
    )
    box.add_argument(
        "--rescale-limit",
        type=float,
        default=140.0,
        help="secondary-axis anchor value (default 140)",
    )
    box.add_argument("--ric", type=Path, help="RIC table (per-cell boxplots)")
    box.add_argument("--title", default=None, help="figure title")
    box.add_argument("--out", type=Path, required=True, help="SVG output file")
    box.set_defaults(handler=_cmd_plot_box)

    pipeline = sub.add_parser("pipeline", help="end-to-end runs")
    pipeline_sub = pipeline.add_subparsers(dest="subcommand", required=True)
    run = pipeline_sub.add_parser(
        "run", parents=[quiet], help="run ingest, ratios, posts, ric, and plots"
    )
    run.add_argument("--config", type=Path, required=True, help="INI config file")
    run.set_defaults(handler=_cmd_pipeline_run)

    return parser


def _cmd_corpus_ingest(args: argparse.Namespace) -> int:
    langs = parse_language_list(args.langs)
    corpus, report = ingest_corpus(
        args.corpus_format, args.input, langs, args.min_chars
    )
    save_corpus(corpus, args.out)
    log.info(
        "kept %d of %d units (%d missing languages, %d too short)",
        report.kept,
        report.total_ids,
        report.missing_language,
        report.too_short,
    )
    return 0


def _cmd_ratios(args: argparse.Namespace) -> int:
    corpus = load_corpus(args.corpus)
    base = parse_language_tag(args.base)
    others = parse_language_list(args.others)
    measure = MEASURES_BY_CLI_NAME[args.measure]
    rows = [
        ratio_table_row(aggregate_ratios(corpus, lang, base, measure))
        for lang in others
    ]
    emit_table(
        rows, format=args.format, destination=args.out, fieldnames=RATIO_TABLE_FIELDS
    )
    return 0


def _cmd_posts_analyze(args: argparse.Namespace) -> int:
    posts_format = args.posts_format
    if posts_format is None:
        posts_format = "csv" if args.posts.suffix.lower() == ".csv" else "jsonl"
    posts = load_posts(args.posts, posts_format)
    accounts = load_accounts(args.accounts)
    assigned, dropped = assign_posts(posts, accounts)
    if dropped:
        log.info("dropped %d unattributable posts", dropped)
    rows = []
    for meta in accounts:
        stats = account_length_stats(assigned[meta], meta, args.min_posts)
        if stats is None:
            log.info(
                "excluding %s@%s (%s): %d posts (need more than %d)",
                meta.screen_name,
                meta.platform,
                meta.language,
                len(assigned[meta]),
                args.min_posts,
            )
            continue
        rows.append(stats_table_row(stats))
    emit_table(
        rows, format=args.format, destination=args.out, fieldnames=STATS_TABLE_FIELDS
    )
    return 0


def _cmd_ric(args: argparse.Namespace) -> int:
    base = parse_language_tag(args.base)
    ratio_means: dict[tuple[str, str], float] = {}
    for row in read_records(args.ratios):
        try:
            key = (str(row["lang_b"]), str(row["lang_a"]))
            ratio_means[key] = float(str(row["mean"]))
        except (KeyError, ValueError) as exc:
            raise DataError(f"{args.ratios}: malformed ratios row: {exc}") from exc
    rows = []
    for record in read_records(args.stats):
        stats = stats_from_row(record)
        rows.append(ric_table_row(compute_ric(stats, ratio_means, base)))
    emit_table(
        rows, format=args.format, destination=args.out, fieldnames=RIC_TABLE_FIELDS
    )
    return 0


def _cmd_limit_check(args: argparse.Namespace) -> int:
    if args.text is not None:
        text = args.text
    else:
        text = args.file.read_text(encoding="utf-8")
        # A trailing newline is a file-format artifact, not message content.
        if text.endswith("\n"):
            text = text[:-1]
    result = check_fit(text, PRESETS[args.platform])
    if args.format == "json":
        payload = {
            "platform": args.platform,
            "fits": result.fits,
            "units_used": result.units_used,
            "units_max": result.units_max,
            "unit_kind": result.unit_kind,
        }
        if result.encoding_chosen is not None:
            payload["encoding"] = result.encoding_chosen
        output = json.dumps(payload, indent=2) + "\n"
    else:
        lines = [
            f"fits: {'yes' if result.fits else 'no'}",
            f"units_used: {result.units_used}",
            f"units_max: {result.units_max}",
            f"unit_kind: {result.unit_kind}",
        ]
        if result.encoding_chosen is not None:
            lines.append(f"encoding: {result.encoding_chosen}")
        output = "\n".join(lines) + "\n"
    if args.out is None:
        sys.stdout.write(output)
    else:
        args.out.write_text(output, encoding="utf-8", newline="")
    return 0


def _cmd_plot_box(args: argparse.Namespace) -> int:
    if (args.corpus is None) == (args.ric is None):
        raise UsageError("give exactly one of --corpus or --ric")
    if args.corpus is not None:
        if not args.base or not args.others:
            raise UsageError("--corpus plots need --base and --others")
        corpus = load_corpus(args.corpus)
        base = parse_language_tag(args.base)
        others = parse_language_list(args.others)
        measure = MEASURES_BY_CLI_NAME[args.measure]
        stats_by_lang = {
            lang: aggregate_ratios(corpus, lang, base, measure) for lang in others
        }
        scale = None
        if args.rescale_lang:
            rescale_lang = parse_language_tag(args.rescale_lang)
            if rescale_lang not in stats_by_lang:
                raise UsageError(f"--rescale-lang {rescale_lang} is not in --others")
            scale = args.rescale_limit / stats_by_lang[rescale_lang].stats.mean
        series = [
            BoxplotSeries(lang, stats_by_lang[lang].stats, scale) for lang in others
        ]
        title = args.title or f"Space ratio vs {base} ({args.measure})"
        secondary_label = (
            f"chars equivalent to {args.rescale_limit:g} {args.rescale_lang}"
            if scale is not None
            else ""
        )
        render_boxplot(
            series,
            title,
            args.out,
            y_label=f"ratio to {base}",
            secondary_label=secondary_label,
        )
        return 0

    cells: dict[tuple[str, str, str], list[float]] = {}
    base_langs: set[str] = set()
    for row in read_records(args.ric):
        try:
            key = (str(row["platform"]), str(row["language"]), str(row["org_type"]))
            values = [float(v) for v in str(row["per_post_ric"]).split()]
            base_langs.add(str(row["base_lang"]))
        except (KeyError, ValueError) as exc:
            raise DataError(f"{args.ric}: malformed RIC row: {exc}") from exc
        cells.setdefault(key, []).extend(values)
    if not cells:
        raise UsageError(f"{args.ric}: no RIC rows to plot")
    series = [
        BoxplotSeries("/".join(key), describe(values))
        for key, values in sorted(cells.items())
    ]
    base_note = "/".join(sorted(base_langs))
    title = args.title or f"Relative information content (base {base_note})"
    render_boxplot(
        series, title, args.out, y_label=f"{base_note}-equivalent characters"
    )
    return 0


def _cmd_pipeline_run(args: argparse.Namespace) -> int:
    return run_pipeline(args.config)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.ERROR if getattr(args, "quiet", False) else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (LingspaceError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
