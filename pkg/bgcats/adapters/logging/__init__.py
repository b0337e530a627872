"""Logging adapters."""

from bgcats.adapters.logging.events import EventType
from bgcats.adapters.logging.silent_logger import SilentLogger
from bgcats.adapters.logging.structured_logger import StructuredLogger


__all__ = ["EventType", "SilentLogger", "StructuredLogger"]
