"""
InMemoryConfigAdapter - test configuration implementation.

Returns the values passed to the constructor.
"""

from bgcats.domain.value_objects import QuadratureSpec, SeriesControl
from bgcats.ports.config_port import ConfigPort


class InMemoryConfigAdapter(ConfigPort):
    """Configuration adapter with fixed values for tests."""

    def __init__(
        self,
        series: SeriesControl | None = None,
        quadrature: QuadratureSpec | None = None,
        workers: int = 1,
        seed: int = 42,
        tolerance: float = 1e-6,
        truncation_tol: float = 1e-8,
    ):
        self._series = series or SeriesControl()
        self._quadrature = quadrature or QuadratureSpec()
        self._workers = workers
        self._seed = seed
        self._tolerance = tolerance
        self._truncation_tol = truncation_tol

    def get_series_control(self) -> SeriesControl:
        return self._series

    def get_quadrature_spec(self) -> QuadratureSpec:
        return self._quadrature

    def get_worker_count(self) -> int:
        return self._workers

    def get_seed(self) -> int:
        return self._seed

    def get_tolerance(self) -> float:
        return self._tolerance

    def get_truncation_tol(self) -> float:
        return self._truncation_tol
