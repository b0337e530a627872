"""
CsvRecordWriter - comma-separated output.

First line is the header; floats use scientific notation with 15 significant
digits; missing values are empty cells.
"""

import csv
from collections.abc import Sequence
from typing import Any, TextIO

from bgcats.ports.record_writer_port import RecordWriterPort

FLOAT_FORMAT = ".14e"


class CsvRecordWriter(RecordWriterPort):
    """Writes rows as CSV; metadata is not part of the CSV body."""

    def write(
        self,
        rows: Sequence[dict[str, Any]],
        meta: dict[str, Any],
        stream: TextIO,
    ) -> None:
        if not rows:
            return
        columns = list(rows[0].keys())
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([format_cell(row.get(column)) for column in columns])


def format_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, FLOAT_FORMAT)
    return str(value)
