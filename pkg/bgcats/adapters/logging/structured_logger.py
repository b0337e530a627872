"""
StructuredLogger adapter - production logging implementation.

Writes one JSON object per line. The CLI points it at stderr so that CSV and
JSON records on stdout stay clean.
"""

import json
import sys
from datetime import datetime, timezone
from typing import Any, TextIO

from bgcats.ports.logging_port import LoggingPort


class StructuredLogger(LoggingPort):
    """
    Logging adapter that outputs structured JSON lines.

    Every entry carries a UTC ISO 8601 `timestamp` and an `event` name.
    """

    def __init__(self, output_stream: TextIO | None = None):
        """
        Initialize the structured logger.

        Args:
            output_stream: Stream to write logs to (default: sys.stderr)
        """
        self.output_stream = output_stream or sys.stderr

    def log_event(self, event_type: Any, context: dict[str, Any]) -> None:
        log_entry = {
            "timestamp": _now(),
            "event": getattr(event_type, "value", str(event_type)),
            **context,
        }
        self._write_log(log_entry)

    def log_check_result(self, result: Any, context: dict[str, Any]) -> None:
        """
        Log a verification check as structured JSON.

        Args:
            result: Object with `name`, `passed`, `value` and `threshold`
            context: Additional context (suite, seed, etc.)
        """
        passed = bool(getattr(result, "passed", False))
        log_entry = {
            "timestamp": _now(),
            "event": "CHECK_PASSED" if passed else "CHECK_FAILED",
            "check": getattr(result, "name", None),
            "value": getattr(result, "value", None),
            "threshold": getattr(result, "threshold", None),
            "context": context,
        }
        self._write_log(log_entry)

    def log_error(self, error: Exception, context: dict[str, Any]) -> None:
        log_entry = {
            "timestamp": _now(),
            "event": "error",
            "error_type": type(error).__name__,
            "error_message": str(error),
            "context": context,
        }
        self._write_log(log_entry)

    def _write_log(self, log_entry: dict[str, Any]) -> None:
        json_log = json.dumps(log_entry, default=str)
        self.output_stream.write(json_log + "\n")
        self.output_stream.flush()


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()
