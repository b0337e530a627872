"""Record writers for scan and distribution output."""

from bgcats.adapters.output.csv_writer import CsvRecordWriter
from bgcats.adapters.output.json_writer import JsonRecordWriter


__all__ = ["CsvRecordWriter", "JsonRecordWriter", "writer_for"]


def writer_for(fmt: str) -> CsvRecordWriter | JsonRecordWriter:
    """Writer for an output format name ("csv" or "json")."""
    if fmt == "csv":
        return CsvRecordWriter()
    if fmt == "json":
        return JsonRecordWriter()
    raise ValueError(f"Unknown output format {fmt!r}; expected csv or json")
