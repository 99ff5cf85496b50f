"""Space measurement: how many units a text occupies under several schemes.

"Characters" are Unicode scalar values of the NFC form; UTF-8 bytes are the
byte length of that form. GBK units follow the common microblog accounting:
1 per ASCII scalar, 2 per any other scalar the two-byte code page can encode.
GSM-7 septets follow the SMS default alphabet. URL stripping and script-based
language detection live here too because length statistics depend on both.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from . import gsm7
from .errors import GbkEncodingError, UsageError
from .langtags import CMN_HANS, ENG, JPN, LanguageTag


class SpaceMeasure(Enum):
    CHARACTERS = "characters"
    UTF8_BYTES = "utf8_bytes"
    GBK_UNITS = "gbk_units"
    GSM7_SEPTETS = "gsm7_septets"


MEASURES_BY_CLI_NAME = {
    "characters": SpaceMeasure.CHARACTERS,
    "utf8": SpaceMeasure.UTF8_BYTES,
    "gbk": SpaceMeasure.GBK_UNITS,
}


class GbkFallback(Enum):
    """What to do with scalars the two-byte code page cannot encode."""

    COUNT_AS_2 = "count-as-2"
    REJECT = "reject"


@dataclass(frozen=True)
class MeasuredLength:
    measure: SpaceMeasure
    value: int


def nfc(text: str) -> str:
    """Canonically composed form; all counting happens on this."""
    return unicodedata.normalize("NFC", text)


@lru_cache(maxsize=4096)
def _gbk_encodable(char: str) -> bool:
    try:
        char.encode("gbk")
    except UnicodeEncodeError:
        return False
    return True


def gbk_unit_length(text: str, fallback: GbkFallback = GbkFallback.COUNT_AS_2) -> int:
    """Units under the 1-per-ASCII / 2-per-other accounting.

    The code page is consulted only for encodability; unencodable scalars
    cost 2 under COUNT_AS_2 and raise GbkEncodingError under REJECT.
    """
    units = 0
    for ch in text:
        if ord(ch) < 128:
            units += 1
        elif _gbk_encodable(ch) or fallback is GbkFallback.COUNT_AS_2:
            units += 2
        else:
            raise GbkEncodingError(ch)
    return units


def count_units(
    text: str,
    measure: SpaceMeasure,
    fallback: GbkFallback = GbkFallback.COUNT_AS_2,
) -> MeasuredLength:
    """Measure the space a text occupies; the text is NFC-normalized first."""
    normalized = nfc(text)
    if measure is SpaceMeasure.CHARACTERS:
        value = len(normalized)
    elif measure is SpaceMeasure.UTF8_BYTES:
        value = len(normalized.encode("utf-8"))
    elif measure is SpaceMeasure.GBK_UNITS:
        value = gbk_unit_length(normalized, fallback)
    elif measure is SpaceMeasure.GSM7_SEPTETS:
        value = gsm7.septet_length(normalized)
    else:
        raise UsageError(f"unknown space measure {measure!r}")
    return MeasuredLength(measure, value)


URL_PATTERN = re.compile(r"https?://\S+", re.IGNORECASE)


def strip_urls(text: str) -> str:
    """Delete every scheme-prefixed URL; surrounding whitespace stays put."""
    return URL_PATTERN.sub("", text)


def count_urls(text: str) -> int:
    """Number of scheme-prefixed URLs in the text."""
    return len(URL_PATTERN.findall(text))


_KANA_RE = re.compile(r"[぀-ヿㇰ-ㇿｦ-ﾟ]")
_HAN_RE = re.compile(
    r"[㐀-䶿一-鿿豈-﫿\U00020000-\U0002ebef]"
)
_LATIN_RE = re.compile(r"[A-Za-zÀ-ÖØ-öø-ɏ]")


def detect_language(text: str) -> LanguageTag | None:
    """Coarse script-based identification; None means undetermined.

    Kana wins over everything, Han over Latin. Han-only text is reported as
    cmn_hans; telling the two Chinese orthographies apart is left to account
    metadata.
    """
    normalized = nfc(text)
    if _KANA_RE.search(normalized):
        return JPN
    if _HAN_RE.search(normalized):
        return CMN_HANS
    scalars = [ch for ch in normalized if not ch.isspace()]
    if not scalars:
        return None
    latin = sum(1 for ch in scalars if _LATIN_RE.match(ch))
    if latin * 2 >= len(scalars):
        return ENG
    return None
