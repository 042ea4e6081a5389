"""Writing reports: JSON through pydantic, CSV with a fixed header and locale-free floats."""

import csv
import io
import logging
import sys
from collections.abc import Iterable, Sequence
from pathlib import Path

from pydantic import BaseModel

from exceptions import OutputWriteError
from models import BoundReport
from utils import format_float

logger = logging.getLogger(__name__)

REPORT_CSV_HEADER = ["inequality", "lhs", "rhs", "slack", "satisfied"]


def to_json(model: BaseModel) -> str:
    return model.model_dump_json(indent=2) + "\n"


def csv_text(header: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    """Comma-separated text, LF line endings; floats are written with 17 significant digits."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_float(cell) if isinstance(cell, float) else cell for cell in row])
    return buffer.getvalue()


def report_csv(report: BoundReport) -> str:
    rows = (
        (entry.inequality, entry.lhs, entry.rhs, entry.slack, str(entry.satisfied).lower())
        for entry in report.entries
    )
    return csv_text(REPORT_CSV_HEADER, rows)


def emit(text: str, out: Path | None) -> None:
    """Write to `out` in one go, or to standard output when no path is given."""
    if out is None:
        sys.stdout.write(text)
        return
    try:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text, encoding="utf-8", newline="\n")
    except OSError as exc:
        raise OutputWriteError(f"cannot write {out}: {exc}") from exc
    logger.info("wrote %s", out)
