#!/usr/bin/env python3
"""
Output documents for the command-line harness
Renders rows as markdown, csv or json and writes them atomically
"""

import csv
import io
import json
import os
import sys
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

FORMATS = ("markdown", "csv", "json")


@dataclass
class OutputDocument:
    """Rows of string cells plus the command that produced them.

    Cells are always strings: exact rationals as "p/q", decimals with an
    explicit number of digits, blanks as "".
    """
    command: str
    params: Dict[str, Any]
    columns: List[str]
    rows: List[Dict[str, str]] = field(default_factory=list)
    format: str = "markdown"

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r} (expected one of {', '.join(FORMATS)})")

    def add_row(self, **cells: Any):
        missing = [c for c in self.columns if c not in cells]
        if missing:
            raise ValueError(f"row is missing columns {missing}")
        self.rows.append({c: "" if cells[c] is None else str(cells[c]) for c in self.columns})

    def column(self, name: str) -> List[str]:
        return [row[name] for row in self.rows]

    def render(self) -> str:
        if self.format == "csv":
            return render_csv(self)
        if self.format == "json":
            return render_json(self)
        return render_markdown(self)


def render_markdown(doc: OutputDocument) -> str:
    widths = [max([len(c)] + [len(row[c]) for row in doc.rows]) for c in doc.columns]
    header = "| " + " | ".join(c.ljust(w) for c, w in zip(doc.columns, widths)) + " |"
    rule = "|" + "|".join("-" * (w + 2) for w in widths) + "|"
    lines = [header, rule]
    for row in doc.rows:
        lines.append("| " + " | ".join(row[c].rjust(w) for c, w in zip(doc.columns, widths)) + " |")
    return "\n".join(lines) + "\n"


def render_csv(doc: OutputDocument) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=doc.columns, lineterminator="\n")
    writer.writeheader()
    writer.writerows(doc.rows)
    return buffer.getvalue()


def render_json(doc: OutputDocument) -> str:
    payload = {
        "command": doc.command,
        "params": {k: _json_param(v) for k, v in doc.params.items()},
        "rows": doc.rows,
    }
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def _json_param(value: Any) -> Any:
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, (list, tuple)):
        return [_json_param(v) for v in value]
    return str(value)


def parse_csv(text: str) -> List[Dict[str, str]]:
    return list(csv.DictReader(io.StringIO(text)))


def write_document(doc: OutputDocument, out: Optional[Union[str, Path]] = None) -> Optional[Path]:
    """Write to stdout, or atomically to `out` (temp file, fsync, replace)"""
    text = doc.render()
    if out is None or str(out) == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return None

    path = Path(out)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, temp_name = tempfile.mkstemp(prefix=f".{path.name}.", suffix=".tmp", dir=path.parent)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as f:
            f.write(text)
            f.flush()
            os.fsync(f.fileno())
        os.replace(temp_name, path)
    except BaseException:
        if os.path.exists(temp_name):
            os.unlink(temp_name)
        raise
    return path
