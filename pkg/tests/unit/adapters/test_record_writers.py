import io
import json

import pytest

from bgcats.adapters.output import CsvRecordWriter, JsonRecordWriter, writer_for

ROWS = [
    {"psi": 0.0, "var_p": 0.25, "status": "ok"},
    {"psi": 1.0, "var_p": None, "status": "DegenerateSuperpositionError"},
]


def test_csv_header_then_rows():
    stream = io.StringIO()
    CsvRecordWriter().write(ROWS, {"command": "scan-variance"}, stream)
    assert stream.getvalue().splitlines() == [
        "psi,var_p,status",
        "0.00000000000000e+00,2.50000000000000e-01,ok",
        "1.00000000000000e+00,,DegenerateSuperpositionError",
    ]


def test_csv_formats_integers_and_booleans():
    stream = io.StringIO()
    CsvRecordWriter().write([{"n": 3, "q_near_zero": True}], {}, stream)
    assert stream.getvalue().splitlines()[1] == "3,true"


def test_csv_without_rows_writes_nothing():
    stream = io.StringIO()
    CsvRecordWriter().write([], {}, stream)
    assert stream.getvalue() == ""


def test_json_document():
    stream = io.StringIO()
    JsonRecordWriter().write(ROWS, {"bindings": {"phi": 0.0}}, stream)
    document = json.loads(stream.getvalue())
    assert document["meta"] == {"bindings": {"phi": 0.0}}
    assert document["rows"][1]["var_p"] is None


def test_json_rejects_nan():
    with pytest.raises(ValueError):
        JsonRecordWriter().write([{"x": float("nan")}], {}, io.StringIO())


def test_writer_for():
    assert isinstance(writer_for("csv"), CsvRecordWriter)
    assert isinstance(writer_for("json"), JsonRecordWriter)
    with pytest.raises(ValueError, match="yaml"):
        writer_for("yaml")
