"""
JsonRecordWriter - one top-level object {meta, rows}.
"""

import json
from collections.abc import Sequence
from typing import Any, TextIO

from bgcats.ports.record_writer_port import RecordWriterPort


class JsonRecordWriter(RecordWriterPort):
    """Writes metadata and rows as a single JSON document."""

    def write(
        self,
        rows: Sequence[dict[str, Any]],
        meta: dict[str, Any],
        stream: TextIO,
    ) -> None:
        json.dump({"meta": meta, "rows": list(rows)}, stream, indent=2, allow_nan=False)
        stream.write("\n")
