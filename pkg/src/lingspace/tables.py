"""Tabular output with deterministic field order and number formatting.

CSV cells render floats with exactly four decimal places; JSON output
rounds floats to four decimals. Both are byte-stable for identical input.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from collections.abc import Iterable, Mapping, Sequence
from pathlib import Path

from .errors import DataError, UsageError

TABLE_FORMATS = ("csv", "json")


def _csv_value(value: object) -> object:
    if isinstance(value, float):
        return f"{value:.4f}"
    return value


def _json_value(value: object) -> object:
    if isinstance(value, float):
        return float(f"{value:.4f}")
    return value


def emit_table(
    rows: Iterable[Mapping[str, object]],
    format: str = "csv",
    destination: str | Path | None = None,
    fieldnames: Sequence[str] | None = None,
) -> None:
    """Write records as CSV or JSON with a stable field order.

    Field order comes from `fieldnames`, falling back to the first row's key
    order. All rows must share one schema. `destination` None writes to
    standard output.
    """
    rows = list(rows)
    if fieldnames is None:
        if not rows:
            raise UsageError("fieldnames are required to emit an empty table")
        fieldnames = list(rows[0].keys())
    fieldnames = list(fieldnames)
    for row in rows:
        if set(row) != set(fieldnames):
            raise UsageError(
                f"row fields {sorted(row)} do not match the table schema "
                f"{sorted(fieldnames)}"
            )
    if format == "csv":
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=fieldnames, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({name: _csv_value(row[name]) for name in fieldnames})
        text = buffer.getvalue()
    elif format == "json":
        payload = [
            {name: _json_value(row[name]) for name in fieldnames} for row in rows
        ]
        text = json.dumps(payload, ensure_ascii=False, indent=2) + "\n"
    else:
        raise UsageError(
            f"unknown table format {format!r} (expected one of: "
            f"{', '.join(TABLE_FORMATS)})"
        )
    if destination is None:
        sys.stdout.write(text)
    else:
        Path(destination).write_text(text, encoding="utf-8", newline="")


def read_records(path: str | Path) -> list[dict[str, object]]:
    """Read a table written by emit_table; format inferred from the suffix.

    CSV values come back as strings; JSON values keep their types.
    """
    path = Path(path)
    if path.suffix.lower() == ".json":
        try:
            payload = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise DataError(f"{path}: invalid JSON table: {exc.msg}") from exc
        if not isinstance(payload, list) or not all(
            isinstance(item, dict) for item in payload
        ):
            raise DataError(f"{path}: JSON table must be an array of objects")
        return payload
    with path.open("r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            return []
        return [dict(row) for row in reader]
