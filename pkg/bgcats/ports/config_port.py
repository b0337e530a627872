"""
ConfigPort interface for numerical settings.

Abstracts the configuration source (bundled YAML plus environment, or fixed
values for tests).
"""

from abc import ABC, abstractmethod

from bgcats.domain.value_objects import QuadratureSpec, SeriesControl


class ConfigPort(ABC):
    """Port interface for configuration access."""

    @abstractmethod
    def get_series_control(self) -> SeriesControl:
        """Tolerance and term cap for hypergeometric and Bessel series."""
        pass

    @abstractmethod
    def get_quadrature_spec(self) -> QuadratureSpec:
        """Initial node count, tolerance and refinement cap for quadrature."""
        pass

    @abstractmethod
    def get_worker_count(self) -> int:
        pass

    @abstractmethod
    def get_seed(self) -> int:
        pass

    @abstractmethod
    def get_tolerance(self) -> float:
        """Pass threshold of the verification suites."""
        pass

    @abstractmethod
    def get_truncation_tol(self) -> float:
        """Largest probability mass a truncated distribution may miss."""
        pass
