"""RecordWriterPort: serializes scan and distribution rows."""

from abc import ABC, abstractmethod
from collections.abc import Sequence
from typing import Any, TextIO


class RecordWriterPort(ABC):
    """Writes rows of equal keys to a text stream."""

    @abstractmethod
    def write(
        self,
        rows: Sequence[dict[str, Any]],
        meta: dict[str, Any],
        stream: TextIO,
    ) -> None:
        """
        Write the rows with their metadata.

        Args:
            rows: One mapping per record; all share the first row's keys
            meta: Parameter bindings and column notes
            stream: Destination text stream
        """
        pass
