"""GSM 03.38 default alphabet tables and septet arithmetic.

Basic-table characters cost one septet; extension-table characters cost two
(an escape septet plus the character). A text containing anything else cannot
be encoded as GSM-7 at all.
"""

from __future__ import annotations

from .errors import GsmNotRepresentableError

# Positions 0x00-0x7F of the default alphabet in code-point order, minus the
# escape at 0x1B, which is a shift marker rather than a character.
GSM7_BASIC = (
    "@£$¥èéùìòÇ\nØø\rÅåΔ_ΦΓΛΩΠΨΣΘΞÆæßÉ"
    " !\"#¤%&'()*+,-./0123456789:;<=>?"
    "¡ABCDEFGHIJKLMNOPQRSTUVWXYZÄÖÑÜ§"
    "¿abcdefghijklmnopqrstuvwxyzäöñüà"
)

# Characters reached via the escape septet.
GSM7_EXTENSION = "\f^{}\\[~]|€"

BASIC_SET = frozenset(GSM7_BASIC)
EXTENSION_SET = frozenset(GSM7_EXTENSION)


def is_gsm_char(char: str) -> bool:
    """True if the single character is representable in GSM-7."""
    return char in BASIC_SET or char in EXTENSION_SET


def is_gsm_text(text: str) -> bool:
    """True if every character of the text is representable in GSM-7."""
    return all(is_gsm_char(ch) for ch in text)


def septet_length(text: str) -> int:
    """Septets needed to encode the text.

    Raises GsmNotRepresentableError on the first character outside both
    tables.
    """
    total = 0
    for ch in text:
        if ch in BASIC_SET:
            total += 1
        elif ch in EXTENSION_SET:
            total += 2
        else:
            raise GsmNotRepresentableError(ch)
    return total
