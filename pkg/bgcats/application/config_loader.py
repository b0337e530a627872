"""
Configuration loader for numerical settings.

Loads the YAML defaults, merges them over the built-in values and validates
types and signs.
"""

from __future__ import annotations

import copy
from pathlib import Path
from typing import Any

import yaml

from bgcats._resources import get_defaults_path
from bgcats.domain.value_objects import QuadratureSpec, SeriesControl


class ConfigValidationError(Exception):
    """Raised when configuration validation fails."""

    pass


class ConfigLoader:
    """
    Loads numerical settings from a YAML file with validation.

    Built-in defaults (aligned with bgcats/config/defaults.yaml) are used
    for every key the file does not set, and for the whole configuration when
    the file is missing or unreadable.
    """

    DEFAULTS: dict[str, Any] = {
        "series": {"rel_tol": 1e-12, "max_terms": 500},
        "quadrature": {"node_count": 64, "rel_tol": 1e-12, "max_refinements": 12},
        "truncation_tol": 1e-8,
        "scan": {"workers": 4},
        "seed": 42,
        "verification": {"tolerance": 1e-6},
    }

    _POSITIVE_FLOATS = (
        ("series", "rel_tol"),
        ("quadrature", "rel_tol"),
        ("truncation_tol",),
        ("verification", "tolerance"),
    )
    _POSITIVE_INTS = (
        ("series", "max_terms"),
        ("quadrature", "node_count"),
        ("quadrature", "max_refinements"),
        ("scan", "workers"),
    )

    def __init__(self, config_path: str | Path | None = None):
        """
        Initialize ConfigLoader.

        Args:
            config_path: YAML file to read (default: bundled defaults.yaml)

        Raises:
            ConfigValidationError: If a configured value has the wrong type or sign
        """
        self.config_path = Path(config_path) if config_path else get_defaults_path()
        self.settings = self._load()

    def _load(self) -> dict[str, Any]:
        settings = copy.deepcopy(self.DEFAULTS)
        if not self.config_path.exists():
            return settings
        try:
            loaded = yaml.safe_load(self.config_path.read_text(encoding="utf-8")) or {}
        except (OSError, yaml.YAMLError):
            return settings
        if not isinstance(loaded, dict):
            raise ConfigValidationError(
                f"{self.config_path} must hold a mapping, got {type(loaded).__name__}"
            )
        for key, value in loaded.items():
            if isinstance(value, dict) and isinstance(settings.get(key), dict):
                settings[key].update(value)
            else:
                settings[key] = value
        self._validate(settings)
        return settings

    def _validate(self, settings: dict[str, Any]) -> None:
        for path in self._POSITIVE_FLOATS:
            value = _lookup(settings, path)
            if isinstance(value, bool) or not isinstance(value, (int, float)) or value <= 0:
                raise ConfigValidationError(
                    f"'{'.'.join(path)}' must be a positive number, got {value!r}"
                )
        for path in self._POSITIVE_INTS:
            value = _lookup(settings, path)
            if isinstance(value, bool) or not isinstance(value, int) or value <= 0:
                raise ConfigValidationError(
                    f"'{'.'.join(path)}' must be a positive integer, got {value!r}"
                )
        seed = settings["seed"]
        if isinstance(seed, bool) or not isinstance(seed, int) or seed < 0:
            raise ConfigValidationError(f"'seed' must be a non-negative integer, got {seed!r}")

    def series_control(self) -> SeriesControl:
        series = self.settings["series"]
        return SeriesControl(rel_tol=float(series["rel_tol"]), max_terms=series["max_terms"])

    def quadrature_spec(self) -> QuadratureSpec:
        quad = self.settings["quadrature"]
        return QuadratureSpec(
            node_count=quad["node_count"],
            rel_tol=float(quad["rel_tol"]),
            max_refinements=quad["max_refinements"],
        )


def _lookup(settings: dict[str, Any], path: tuple[str, ...]) -> Any:
    value: Any = settings
    for key in path:
        value = value.get(key) if isinstance(value, dict) else None
    return value
