"""
Event type definitions for structured logs.

Categories:
- SCAN: parameter scan lifecycle
- CHECK: verification checks and suites
- DIAGNOSTIC: computed windows and truncation warnings
"""

from enum import Enum


class EventType(Enum):
    """Structured log event categories."""

    # SCAN events
    SCAN_STARTED = "SCAN_STARTED"
    SCAN_POINT_FAILED = "SCAN_POINT_FAILED"
    SCAN_COMPLETED = "SCAN_COMPLETED"

    # CHECK events
    CHECK_PASSED = "CHECK_PASSED"
    CHECK_FAILED = "CHECK_FAILED"
    SUITE_COMPLETED = "SUITE_COMPLETED"

    # DIAGNOSTIC events
    WINDOW_REPORTED = "WINDOW_REPORTED"
    TRUNCATION_WARNING = "TRUNCATION_WARNING"
