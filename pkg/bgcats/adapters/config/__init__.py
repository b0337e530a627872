"""Config adapters."""

from bgcats.adapters.config.environment_config_adapter import (
    EnvironmentConfigAdapter,
)
from bgcats.adapters.config.in_memory_config_adapter import (
    InMemoryConfigAdapter,
)


__all__ = ["EnvironmentConfigAdapter", "InMemoryConfigAdapter"]
