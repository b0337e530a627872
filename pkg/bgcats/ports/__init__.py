"""Port interfaces.

The application services depend on these abstractions only; the CLI wires in
the concrete adapters.
"""

from bgcats.ports.config_port import ConfigPort
from bgcats.ports.logging_port import LoggingPort
from bgcats.ports.record_writer_port import RecordWriterPort


__all__ = ["ConfigPort", "LoggingPort", "RecordWriterPort"]
