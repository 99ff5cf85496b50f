"""Microblog post ingestion, per-account length statistics, and relative
information content against a baseline language.

Lengths are NFC character counts; the "without URLs" variants measure the
post after scheme-prefixed URLs are deleted. An account enters the analysis
only with strictly more than min_posts posts.
"""

from __future__ import annotations

import csv
import json
import logging
import statistics
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from .errors import DataError, UsageError
from .langtags import CMN_HANS, CMN_HANT, LanguageTag, parse_language_tag
from .measures import SpaceMeasure, count_units, count_urls, detect_language, strip_urls

log = logging.getLogger(__name__)

PLATFORMS = ("twitter", "weibo")
ORG_TYPES = ("embassy", "news")

DEFAULT_MIN_POSTS = 50


@dataclass(frozen=True)
class AccountMeta:
    """One analyzed account; bilingual accounts appear once per language."""

    screen_name: str
    platform: str
    language: LanguageTag
    org_type: str


@dataclass(frozen=True)
class Post:
    post_id: str
    account: str
    platform: str
    text: str
    created_at: datetime


@dataclass(frozen=True)
class AccountStats:
    """Length statistics for one account's posts."""

    meta: AccountMeta
    n_posts: int
    mean_chars_with_urls: float
    mean_chars_without_urls: float
    per_post_lengths: tuple[int, ...]
    url_count_histogram: dict[int, int]


@dataclass(frozen=True)
class RicResult:
    """An account's lengths re-expressed in baseline-language characters."""

    meta: AccountMeta
    base_lang: LanguageTag
    ratio_used: float
    mean_ric: float
    per_post_ric: tuple[float, ...]


_REQUIRED_POST_FIELDS = ("id", "account", "platform", "text", "created_at")
_ACCOUNT_FIELDS = ("screen_name", "platform", "language", "org_type")


def _parse_timestamp(value: str) -> datetime:
    text = value.strip()
    if text.endswith(("Z", "z")):
        text = text[:-1] + "+00:00"
    parsed = datetime.fromisoformat(text)
    if parsed.tzinfo is None:
        parsed = parsed.replace(tzinfo=timezone.utc)
    return parsed.astimezone(timezone.utc)


def _record_problem(record: Mapping[str, object]) -> str | None:
    for field in _REQUIRED_POST_FIELDS:
        value = record.get(field)
        if value is None:
            return f"missing {field!r}"
        if field != "text" and not str(value).strip():
            return f"empty {field!r}"
    if str(record["platform"]) not in PLATFORMS:
        return f"unknown platform {record['platform']!r}"
    try:
        _parse_timestamp(str(record["created_at"]))
    except ValueError:
        return f"unparseable created_at {record['created_at']!r}"
    return None


def load_posts(path: str | Path, format: str = "jsonl") -> list[Post]:
    """Read posts from a JSONL or CSV file, preserving file order.

    Every record needs id, account, platform, text, and an ISO-8601
    created_at; violations are collected and raised together with their line
    numbers.
    """
    path = Path(path)
    if format == "jsonl":
        records = _read_jsonl_records(path)
    elif format == "csv":
        records = _read_csv_records(path, _REQUIRED_POST_FIELDS)
    else:
        raise UsageError(f"unknown posts format {format!r} (expected jsonl or csv)")

    posts: list[Post] = []
    bad: list[tuple[int, str]] = []
    seen: set[tuple[str, str]] = set()
    for lineno, record, parse_error in records:
        if parse_error is not None:
            bad.append((lineno, parse_error))
            continue
        problem = _record_problem(record)
        if problem is not None:
            bad.append((lineno, problem))
            continue
        key = (str(record["platform"]), str(record["id"]))
        if key in seen:
            bad.append((lineno, f"duplicate post id {record['id']!r}"))
            continue
        seen.add(key)
        posts.append(
            Post(
                post_id=str(record["id"]),
                account=str(record["account"]),
                platform=str(record["platform"]),
                text=str(record["text"]),
                created_at=_parse_timestamp(str(record["created_at"])),
            )
        )
    if bad:
        shown = "; ".join(f"line {lineno}: {reason}" for lineno, reason in bad[:20])
        more = f" (and {len(bad) - 20} more)" if len(bad) > 20 else ""
        raise DataError(f"{path}: invalid post records: {shown}{more}")
    return posts


def _read_jsonl_records(path: Path):
    out = []
    with path.open("r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                out.append((lineno, {}, f"invalid JSON ({exc.msg})"))
                continue
            if not isinstance(record, dict):
                out.append((lineno, {}, "record is not an object"))
                continue
            out.append((lineno, record, None))
    return out


def _read_csv_records(path: Path, required: Sequence[str]):
    out = []
    with path.open("r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            return out
        missing = [name for name in required if name not in reader.fieldnames]
        if missing:
            raise DataError(f"{path}: missing columns: {', '.join(missing)}")
        for row in reader:
            out.append((reader.line_num, row, None))
    return out


def load_accounts(path: str | Path) -> list[AccountMeta]:
    """Read account metadata from CSV, in file order."""
    path = Path(path)
    accounts: list[AccountMeta] = []
    seen: set[tuple[str, str, str]] = set()
    with path.open("r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            return accounts
        missing = [name for name in _ACCOUNT_FIELDS if name not in reader.fieldnames]
        if missing:
            raise DataError(f"{path}: missing columns: {', '.join(missing)}")
        for row in reader:
            lineno = reader.line_num
            screen_name = (row["screen_name"] or "").strip()
            platform = (row["platform"] or "").strip()
            org_type = (row["org_type"] or "").strip()
            if not screen_name:
                raise DataError(f"{path}: line {lineno}: empty screen_name")
            if platform not in PLATFORMS:
                raise DataError(f"{path}: line {lineno}: unknown platform {platform!r}")
            if org_type not in ORG_TYPES:
                raise DataError(f"{path}: line {lineno}: unknown org_type {org_type!r}")
            try:
                language = parse_language_tag((row["language"] or "").strip())
            except UsageError as exc:
                raise DataError(f"{path}: line {lineno}: {exc}") from exc
            key = (screen_name, platform, language)
            if key in seen:
                raise DataError(
                    f"{path}: line {lineno}: duplicate account {screen_name}@{platform} "
                    f"for language {language}"
                )
            seen.add(key)
            accounts.append(AccountMeta(screen_name, platform, language, org_type))
    return accounts


def account_length_stats(
    posts: Sequence[Post],
    meta: AccountMeta,
    min_posts: int = DEFAULT_MIN_POSTS,
) -> AccountStats | None:
    """Length statistics for one account, or None when it has too few posts.

    Inclusion requires strictly more than min_posts posts. Posts that are
    empty after URL stripping stay in with length 0.
    """
    for post in posts:
        if post.account != meta.screen_name or post.platform != meta.platform:
            raise UsageError(
                f"post {post.post_id!r} belongs to {post.account}@{post.platform}, "
                f"not {meta.screen_name}@{meta.platform}"
            )
    if len(posts) <= min_posts:
        return None
    with_urls = [
        count_units(post.text, SpaceMeasure.CHARACTERS).value for post in posts
    ]
    without_urls = [
        count_units(strip_urls(post.text), SpaceMeasure.CHARACTERS).value
        for post in posts
    ]
    histogram: dict[int, int] = {}
    for post in posts:
        urls = count_urls(post.text)
        histogram[urls] = histogram.get(urls, 0) + 1
    return AccountStats(
        meta=meta,
        n_posts=len(posts),
        mean_chars_with_urls=statistics.fmean(with_urls),
        mean_chars_without_urls=statistics.fmean(without_urls),
        per_post_lengths=tuple(without_urls),
        url_count_histogram=dict(sorted(histogram.items())),
    )


def compute_ric(
    stats: AccountStats,
    ratios: Mapping[tuple[LanguageTag, LanguageTag], float],
    base_lang: LanguageTag,
) -> RicResult:
    """Divide an account's lengths by its language's ratio to the baseline."""
    language = stats.meta.language
    if language == base_lang:
        ratio_used = 1.0
    else:
        key = (language, base_lang)
        if key not in ratios:
            raise UsageError(
                f"no ratio available for ({language}, {base_lang}); "
                f"supply ratio({language}, {base_lang})"
            )
        ratio_used = float(ratios[key])
        if ratio_used <= 0:
            raise UsageError(
                f"ratio({language}, {base_lang}) must be positive, got {ratio_used}"
            )
    per_post = tuple(length / ratio_used for length in stats.per_post_lengths)
    return RicResult(
        meta=stats.meta,
        base_lang=base_lang,
        ratio_used=ratio_used,
        mean_ric=stats.mean_chars_without_urls / ratio_used,
        per_post_ric=per_post,
    )


def cell_key(meta: AccountMeta) -> tuple[str, str, str]:
    """Grouping key used by the summary figures."""
    return (meta.platform, meta.language, meta.org_type)


def assign_posts(
    posts: Iterable[Post], accounts: Sequence[AccountMeta]
) -> tuple[dict[AccountMeta, list[Post]], int]:
    """Group posts under their account metadata.

    Accounts registered in several languages get each post routed by its
    detected script; posts matching no registered language, or no known
    account, are dropped with a warning. Returns the grouping and the count
    of dropped posts.
    """
    by_account: dict[tuple[str, str], list[AccountMeta]] = {}
    for meta in accounts:
        by_account.setdefault((meta.screen_name, meta.platform), []).append(meta)
    assigned: dict[AccountMeta, list[Post]] = {meta: [] for meta in accounts}
    dropped = 0
    for post in posts:
        metas = by_account.get((post.account, post.platform))
        if not metas:
            dropped += 1
            log.warning(
                "dropping post %s: unknown account %s@%s",
                post.post_id,
                post.account,
                post.platform,
            )
            continue
        if len(metas) == 1:
            assigned[metas[0]].append(post)
            continue
        meta = _route_by_language(post, metas)
        if meta is None:
            dropped += 1
            log.warning(
                "dropping post %s: cannot attribute it to one of languages %s",
                post.post_id,
                ", ".join(m.language for m in metas),
            )
            continue
        assigned[meta].append(post)
    return assigned, dropped


def _route_by_language(post: Post, metas: Sequence[AccountMeta]) -> AccountMeta | None:
    detected = detect_language(post.text)
    if detected is None:
        return None
    for meta in metas:
        if meta.language == detected:
            return meta
    if detected == CMN_HANS:
        # Han-only text cannot distinguish the two Chinese orthographies;
        # defer to whichever variant the account registers.
        chinese = [m for m in metas if m.language in (CMN_HANS, CMN_HANT)]
        if len(chinese) == 1:
            return chinese[0]
    return None


STATS_TABLE_FIELDS = (
    "screen_name",
    "platform",
    "language",
    "org_type",
    "n_posts",
    "mean_chars_with_urls",
    "mean_chars_without_urls",
    "url_count_histogram",
    "per_post_lengths",
)

RIC_TABLE_FIELDS = (
    "screen_name",
    "platform",
    "language",
    "org_type",
    "base_lang",
    "ratio_used",
    "mean_ric",
    "per_post_ric",
)


def stats_table_row(stats: AccountStats) -> dict[str, object]:
    """Flatten AccountStats into the stats table schema."""
    histogram = " ".join(
        f"{count}:{freq}" for count, freq in sorted(stats.url_count_histogram.items())
    )
    return {
        "screen_name": stats.meta.screen_name,
        "platform": stats.meta.platform,
        "language": stats.meta.language,
        "org_type": stats.meta.org_type,
        "n_posts": stats.n_posts,
        "mean_chars_with_urls": stats.mean_chars_with_urls,
        "mean_chars_without_urls": stats.mean_chars_without_urls,
        "url_count_histogram": histogram,
        "per_post_lengths": " ".join(str(v) for v in stats.per_post_lengths),
    }


def stats_from_row(row: Mapping[str, object]) -> AccountStats:
    """Rebuild AccountStats from a stats table row."""
    try:
        meta = AccountMeta(
            screen_name=str(row["screen_name"]),
            platform=str(row["platform"]),
            language=parse_language_tag(str(row["language"])),
            org_type=str(row["org_type"]),
        )
        histogram: dict[int, int] = {}
        for pair in str(row["url_count_histogram"]).split():
            count, freq = pair.split(":")
            histogram[int(count)] = int(freq)
        lengths = tuple(int(v) for v in str(row["per_post_lengths"]).split())
        return AccountStats(
            meta=meta,
            n_posts=int(row["n_posts"]),
            mean_chars_with_urls=float(str(row["mean_chars_with_urls"])),
            mean_chars_without_urls=float(str(row["mean_chars_without_urls"])),
            per_post_lengths=lengths,
            url_count_histogram=histogram,
        )
    except (KeyError, ValueError) as exc:
        raise DataError(f"malformed stats row: {exc}") from exc


def ric_table_row(result: RicResult) -> dict[str, object]:
    """Flatten RicResult into the RIC table schema."""
    return {
        "screen_name": result.meta.screen_name,
        "platform": result.meta.platform,
        "language": result.meta.language,
        "org_type": result.meta.org_type,
        "base_lang": result.base_lang,
        "ratio_used": result.ratio_used,
        "mean_ric": result.mean_ric,
        "per_post_ric": " ".join(f"{v:.4f}" for v in result.per_post_ric),
    }
