"""
SilentLogger adapter - test logging implementation.

No-op logger for tests and for CLI runs without --log.
"""

from typing import Any

from bgcats.ports.logging_port import LoggingPort


class SilentLogger(LoggingPort):
    """Logging adapter whose methods do nothing."""

    def log_event(self, event_type: Any, context: dict[str, Any]) -> None:
        pass

    def log_check_result(self, result: Any, context: dict[str, Any]) -> None:
        pass

    def log_error(self, error: Exception, context: dict[str, Any]) -> None:
        pass
