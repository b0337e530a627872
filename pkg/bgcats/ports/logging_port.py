"""
LoggingPort interface for structured logging.

Defines the contract for logging scan progress, verification checks and
errors.
"""

from abc import ABC, abstractmethod
from typing import Any


class LoggingPort(ABC):
    """
    Port interface for logging operations.

    Implementations provide different logging strategies (structured JSON,
    silent for testing) behind one interface.
    """

    @abstractmethod
    def log_event(self, event_type: Any, context: dict[str, Any]) -> None:
        """
        Log a lifecycle event.

        Args:
            event_type: EventType member (or its string value)
            context: Event payload (scan variable, point count, etc.)
        """
        pass

    @abstractmethod
    def log_check_result(self, result: Any, context: dict[str, Any]) -> None:
        """
        Log the outcome of one verification check.

        Args:
            result: The check result object
            context: Additional context (suite, tolerance, etc.)
        """
        pass

    @abstractmethod
    def log_error(self, error: Exception, context: dict[str, Any]) -> None:
        """
        Log an error raised while evaluating a state or a check.

        Args:
            error: The exception that was raised
            context: Additional context about where the error occurred
        """
        pass
