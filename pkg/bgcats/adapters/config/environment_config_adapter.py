"""
EnvironmentConfigAdapter - production configuration implementation.

Reads the YAML defaults through ConfigLoader and lets BGCATS_* environment
variables override single values.
"""

import os

from bgcats.application.config_loader import ConfigLoader, ConfigValidationError
from bgcats.domain.value_objects import QuadratureSpec, SeriesControl
from bgcats.ports.config_port import ConfigPort


class EnvironmentConfigAdapter(ConfigPort):
    """
    Production configuration adapter.

    Environment variables: BGCATS_REL_TOL, BGCATS_MAX_TERMS, BGCATS_WORKERS,
    BGCATS_SEED, BGCATS_TOLERANCE.
    """

    def __init__(
        self,
        loader: ConfigLoader | None = None,
        seed: int | None = None,
        tolerance: float | None = None,
    ):
        """
        Initialize the environment config adapter.

        Args:
            loader: Source of the file-level settings (default: bundled YAML)
            seed: Command-line seed, taking precedence over the environment
            tolerance: Command-line verification tolerance, same precedence
        """
        self._loader = loader or ConfigLoader()
        self._seed = seed
        self._tolerance = tolerance

    def get_series_control(self) -> SeriesControl:
        base = self._loader.series_control()
        return SeriesControl(
            rel_tol=_env_float("BGCATS_REL_TOL", base.rel_tol),
            max_terms=_env_int("BGCATS_MAX_TERMS", base.max_terms),
        )

    def get_quadrature_spec(self) -> QuadratureSpec:
        return self._loader.quadrature_spec()

    def get_worker_count(self) -> int:
        return _env_int("BGCATS_WORKERS", self._loader.settings["scan"]["workers"])

    def get_seed(self) -> int:
        if self._seed is not None:
            return self._seed
        return _env_int("BGCATS_SEED", self._loader.settings["seed"])

    def get_tolerance(self) -> float:
        if self._tolerance is not None:
            return self._tolerance
        return _env_float(
            "BGCATS_TOLERANCE", self._loader.settings["verification"]["tolerance"]
        )

    def get_truncation_tol(self) -> float:
        return float(self._loader.settings["truncation_tol"])


def _env_float(name: str, default: float) -> float:
    raw = os.environ.get(name)
    if raw is None:
        return float(default)
    try:
        return float(raw)
    except ValueError as exc:
        raise ConfigValidationError(f"{name} must be a number, got {raw!r}") from exc


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return int(default)
    try:
        return int(raw)
    except ValueError as exc:
        raise ConfigValidationError(f"{name} must be an integer, got {raw!r}") from exc
