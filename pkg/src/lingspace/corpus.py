"""Parallel corpora: parsing, alignment, filtering, persistence.

A corpus holds aligned units (paragraphs or talks) carrying the same content
in several languages. Declaration-style plain-text documents align
positionally by paragraph; subtitle corpora align by talk directory.
"""

from __future__ import annotations

import json
import logging
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from pathlib import Path

from .errors import DataError, SubtitleParseError, UsageError
from .langtags import ENG, LanguageTag, parse_language_tag
from .measures import SpaceMeasure, count_units
from .subtitles import parse_subtitle

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class AlignedUnit:
    """One unit of content with a text per language."""

    unit_id: str
    texts: dict[LanguageTag, str]

    def __post_init__(self) -> None:
        if not self.unit_id:
            raise DataError("unit_id must be non-empty")
        if not self.texts:
            raise DataError(f"unit {self.unit_id!r} has no texts")
        for lang, text in self.texts.items():
            if not text.strip():
                raise DataError(f"unit {self.unit_id!r} has an empty {lang} text")


@dataclass(frozen=True)
class ParallelCorpus:
    """An ordered collection of aligned units, immutable once built.

    Units built under the default policy carry every corpus language; a
    corpus built without require_all_languages may hold partial units.
    """

    name: str
    languages: tuple[LanguageTag, ...]
    units: tuple[AlignedUnit, ...]
    provenance: str = ""

    def __post_init__(self) -> None:
        if not self.languages:
            raise DataError("corpus has no languages")
        if len(set(self.languages)) != len(self.languages):
            raise DataError("corpus languages contain duplicates")
        lang_set = set(self.languages)
        seen: set[str] = set()
        for unit in self.units:
            if unit.unit_id in seen:
                raise DataError(f"duplicate unit_id {unit.unit_id!r}")
            seen.add(unit.unit_id)
            extras = set(unit.texts) - lang_set
            if extras:
                raise DataError(
                    f"unit {unit.unit_id!r} carries languages outside the "
                    f"corpus language set: {sorted(extras)}"
                )

    def __len__(self) -> int:
        return len(self.units)


@dataclass(frozen=True)
class CorpusFilterPolicy:
    """Unit admission rules applied while building a corpus.

    min_length_chars is measured on the reference language; it exists to
    drop degenerate units such as music-only talks whose transcripts are a
    few characters long.
    """

    require_all_languages: bool = True
    min_length_chars: int = 1000
    reference_lang: LanguageTag = ENG

    def __post_init__(self) -> None:
        if self.min_length_chars < 0:
            raise UsageError("min_length_chars must be >= 0")


@dataclass(frozen=True)
class ExclusionReport:
    """Where the input unit ids went during corpus construction."""

    total_ids: int
    missing_language: int
    too_short: int
    kept: int


def parse_udhr_language_file(content: str, lang: LanguageTag) -> list[tuple[int, str]]:
    """Split a declaration-style plain-text file into trimmed paragraphs.

    A paragraph is a maximal run of non-blank lines; indices are consecutive
    from 0. Newlines inside a paragraph are preserved.
    """
    parse_language_tag(lang)
    paragraphs: list[tuple[int, str]] = []
    current: list[str] = []
    for line in content.splitlines():
        if line.strip():
            current.append(line)
        elif current:
            paragraphs.append((len(paragraphs), "\n".join(current).strip()))
            current = []
    if current:
        paragraphs.append((len(paragraphs), "\n".join(current).strip()))
    return paragraphs


def build_parallel_corpus(
    per_language_units: Mapping[LanguageTag, Iterable[tuple[str, str]]],
    policy: CorpusFilterPolicy,
    *,
    name: str = "corpus",
    provenance: str = "",
) -> tuple[ParallelCorpus, ExclusionReport]:
    """Assemble aligned units from per-language (unit_id, text) lists.

    Unit order follows first appearance across the supplied languages.
    Whitespace-only texts count as absent. Returns the corpus plus a report
    of how many unit ids were dropped and why.
    """
    if len(per_language_units) < 2:
        raise UsageError("need at least two languages to build a parallel corpus")
    by_lang: dict[LanguageTag, dict[str, str]] = {}
    for lang, items in per_language_units.items():
        parse_language_tag(lang)
        table: dict[str, str] = {}
        for unit_id, text in items:
            unit_id = str(unit_id)
            if unit_id in table:
                raise DataError(f"duplicate unit_id {unit_id!r} in language {lang}")
            table[unit_id] = text
        by_lang[lang] = table
    languages = tuple(by_lang)

    if policy.min_length_chars > 0 and policy.reference_lang not in by_lang:
        raise UsageError(
            f"reference language {policy.reference_lang} is not among the "
            f"supplied languages; adjust reference_lang or set "
            f"min_length_chars=0"
        )

    all_ids: dict[str, None] = {}
    for lang in languages:
        for unit_id in by_lang[lang]:
            all_ids.setdefault(unit_id)

    missing = too_short = 0
    units: list[AlignedUnit] = []
    for unit_id in all_ids:
        texts = {
            lang: by_lang[lang][unit_id]
            for lang in languages
            if unit_id in by_lang[lang] and by_lang[lang][unit_id].strip()
        }
        if len(texts) < len(languages) and (policy.require_all_languages or not texts):
            missing += 1
            continue
        if policy.min_length_chars > 0:
            ref_text = texts.get(policy.reference_lang)
            ref_len = (
                count_units(ref_text, SpaceMeasure.CHARACTERS).value if ref_text else 0
            )
            if ref_len < policy.min_length_chars:
                too_short += 1
                continue
        units.append(AlignedUnit(unit_id, texts))

    corpus = ParallelCorpus(name, languages, tuple(units), provenance)
    report = ExclusionReport(len(all_ids), missing, too_short, len(units))
    return corpus, report


def load_udhr_directory(
    directory: str | Path,
    langs: Sequence[LanguageTag],
    policy: CorpusFilterPolicy | None = None,
) -> tuple[ParallelCorpus, ExclusionReport]:
    """Read `<dir>/<lang>.txt` files and align them paragraph by paragraph.

    The files must agree on paragraph count; a mismatch is a data error
    because positional alignment would silently pair unrelated paragraphs.
    """
    directory = Path(directory)
    if policy is None:
        policy = CorpusFilterPolicy(min_length_chars=0)
    per_lang: dict[LanguageTag, list[tuple[str, str]]] = {}
    counts: dict[LanguageTag, int] = {}
    for lang in langs:
        path = directory / f"{lang}.txt"
        if not path.is_file():
            raise DataError(f"missing translation file: {path}")
        content = _read_text(path)
        paragraphs = parse_udhr_language_file(content, lang)
        counts[lang] = len(paragraphs)
        per_lang[lang] = [(str(index), text) for index, text in paragraphs]
    if len(set(counts.values())) > 1:
        detail = ", ".join(f"{lang}={n}" for lang, n in counts.items())
        raise DataError(
            f"paragraph counts differ across languages ({detail}); "
            f"positional alignment is impossible"
        )
    return build_parallel_corpus(
        per_lang,
        policy,
        name=directory.name,
        provenance=f"declaration-style directory {directory.name}",
    )


_SUFFIX_FORMATS = {".srt": "srt", ".vtt": "webvtt", ".json": "json_captions"}


def load_subtitle_directory(
    directory: str | Path,
    langs: Sequence[LanguageTag],
    policy: CorpusFilterPolicy | None = None,
) -> tuple[ParallelCorpus, ExclusionReport]:
    """Read `<dir>/<talk_id>/<lang>.(srt|vtt|json)` trees into talk units.

    Talks are visited in sorted directory order; within a talk the first
    caption file found per language (srt, then vtt, then json) wins.
    """
    directory = Path(directory)
    if policy is None:
        policy = CorpusFilterPolicy()
    talk_dirs = sorted(p for p in directory.iterdir() if p.is_dir())
    if not talk_dirs:
        raise DataError(f"no talk directories under {directory}")
    per_lang: dict[LanguageTag, list[tuple[str, str]]] = {lang: [] for lang in langs}
    for talk in talk_dirs:
        for lang in langs:
            for suffix, fmt in _SUFFIX_FORMATS.items():
                path = talk / f"{lang}{suffix}"
                if not path.is_file():
                    continue
                content = _read_text(path)
                try:
                    transcript = parse_subtitle(content, fmt)
                except SubtitleParseError as exc:
                    raise DataError(f"{path}: {exc}") from exc
                per_lang[lang].append((talk.name, transcript))
                break
    return build_parallel_corpus(
        per_lang,
        policy,
        name=directory.name,
        provenance=f"subtitle directory {directory.name}",
    )


def _read_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        # The underlying message names the offending byte offset.
        raise DataError(f"{path}: {exc}") from exc


def save_corpus(corpus: ParallelCorpus, path: str | Path) -> None:
    """Write a corpus as line-delimited JSON: a header record, then one
    record per unit with the unit id and one field per language."""
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="\n") as fh:
        header = {
            "name": corpus.name,
            "languages": list(corpus.languages),
            "provenance": corpus.provenance,
        }
        fh.write(json.dumps(header, ensure_ascii=False) + "\n")
        for unit in corpus.units:
            record: dict[str, str] = {"unit_id": unit.unit_id}
            for lang in corpus.languages:
                if lang in unit.texts:
                    record[lang] = unit.texts[lang]
            fh.write(json.dumps(record, ensure_ascii=False) + "\n")


def load_corpus(path: str | Path) -> ParallelCorpus:
    """Read a corpus written by save_corpus.

    Languages in the file must already be registered.
    """
    path = Path(path)
    with path.open("r", encoding="utf-8") as fh:
        header_line = fh.readline()
        if not header_line.strip():
            raise DataError(f"{path}: empty corpus file")
        try:
            header = json.loads(header_line)
        except json.JSONDecodeError as exc:
            raise DataError(f"{path}:1: invalid corpus header: {exc.msg}") from exc
        for key in ("name", "languages", "provenance"):
            if key not in header:
                raise DataError(f"{path}:1: corpus header lacks {key!r}")
        languages = tuple(parse_language_tag(lang) for lang in header["languages"])
        units: list[AlignedUnit] = []
        for lineno, line in enumerate(fh, start=2):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise DataError(f"{path}:{lineno}: invalid unit record: {exc.msg}") from exc
            if "unit_id" not in record:
                raise DataError(f"{path}:{lineno}: unit record lacks 'unit_id'")
            texts = {lang: record[lang] for lang in languages if lang in record}
            try:
                units.append(AlignedUnit(str(record["unit_id"]), texts))
            except DataError as exc:
                raise DataError(f"{path}:{lineno}: {exc}") from exc
    return ParallelCorpus(
        header["name"], languages, tuple(units), header["provenance"]
    )
