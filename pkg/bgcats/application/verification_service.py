"""
Verification suites.

Each suite runs a fixed list of numerical checks against the truncated Fock
oracle or against independent evaluations of the same quantity and reports
one CheckResult per check. `run("all")` runs every suite in order.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import asdict, dataclass

import numpy as np

from bgcats.adapters.logging.events import EventType
from bgcats.domain.errors import BgcatsError
from bgcats.domain.overcompleteness import (
    FamilyKind,
    FamilySpec,
    MeasureDensity,
    MeasureKind,
    measure_compare,
    resolve_unity,
    n_angle_unity_check,
)
from bgcats.domain.quantum_stats import (
    QuadraturePair,
    QuadratureTarget,
    robertson_matrices,
)
from bgcats.domain.special_fns import bessel_k, bessel_k_integral
from bgcats.domain.spnr_cats import (
    multi_angle_state,
    pair_eigen_residual,
    sa_cat,
    spnr_bg_state,
)
from bgcats.domain.value_objects import SpaceConfig, SpnrCoeffs, UpqLabel
from bgcats.ports.config_port import ConfigPort
from bgcats.ports.logging_port import LoggingPort

SUITES = ("special", "eigen", "unity", "theorem-a2", "measures", "robertson")
SUITE_ALIASES = {"n-angle": "theorem-a2"}

SPECIAL_ORDERS = (0, 1, -1, 2, -2, 3, -3)
SPECIAL_POINTS = (0.1, 0.5, 1.0, 2.0, 5.0)
SPECIAL_TOL = 1e-8
EIGEN_TOL = 1e-9
SQUARED_EIGEN_TOL = 1e-8
SECTOR_TOL = 1e-5
MEASURE_TOL = 1e-6
MEASURE_RADII = (0.5, 1.0, 2.0)
ROBERTSON_DET_TOL = 1e-8
ROBERTSON_COV_TOL = 1e-9


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    value: float
    threshold: float
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict[str, object]:
        return asdict(self)


def _check(suite: str, name: str, value: float, threshold: float, detail: str = "") -> CheckResult:
    return CheckResult(suite, name, float(value), threshold, bool(value < threshold), detail)


def _random_alpha(rng: np.random.Generator, modes: int, scale: float = 0.8) -> tuple[complex, ...]:
    re, im = rng.uniform(-scale, scale, (2, modes)) / math.sqrt(modes)
    return tuple(complex(a, b) for a, b in zip(re, im))


class VerificationService:
    """Runs the verification suites with the configured tolerance and seed."""

    def __init__(self, config: ConfigPort, logger: LoggingPort):
        self._config = config
        self._logger = logger

    def run(self, suite: str) -> list[CheckResult]:
        """
        Run one suite, or every suite for "all".

        Raises:
            ValueError: If the suite name is unknown
        """
        suite = SUITE_ALIASES.get(suite, suite)
        names = SUITES if suite == "all" else (suite,)
        unknown = [name for name in names if name not in SUITES]
        if unknown:
            raise ValueError(
                f"Unknown suite {suite!r}; expected one of {', '.join(SUITES)} or all"
            )
        runners: dict[str, Callable[[], list[CheckResult]]] = {
            "special": self._special,
            "eigen": self._eigen,
            "unity": self._unity,
            "theorem-a2": self._n_angle_unity,
            "measures": self._measures,
            "robertson": self._robertson,
        }
        results: list[CheckResult] = []
        for name in names:
            suite_results = self._guarded(name, runners[name])
            for result in suite_results:
                self._logger.log_check_result(result, {"suite": name})
            self._logger.log_event(
                EventType.SUITE_COMPLETED,
                {
                    "suite": name,
                    "checks": len(suite_results),
                    "failed": sum(1 for r in suite_results if not r.passed),
                },
            )
            results.extend(suite_results)
        return results

    def _guarded(
        self, name: str, runner: Callable[[], list[CheckResult]]
    ) -> list[CheckResult]:
        try:
            return runner()
        except BgcatsError as exc:
            self._logger.log_error(exc, {"suite": name})
            return [CheckResult(name, "suite", math.inf, 0.0, False, f"{type(exc).__name__}: {exc}")]

    def _rng(self) -> np.random.Generator:
        return np.random.default_rng(self._config.get_seed())

    def _special(self) -> list[CheckResult]:
        ctl = self._config.get_series_control()
        quad = self._config.get_quadrature_spec()
        worst = 0.0
        where = ""
        for nu in SPECIAL_ORDERS:
            for z in SPECIAL_POINTS:
                series = bessel_k(nu, 2.0 * z, ctl)
                integral = bessel_k_integral(nu, z, quad).real
                deviation = abs(integral - series) / abs(series)
                if deviation > worst:
                    worst, where = deviation, f"nu={nu}, z={z}"
        return [_check("special", "bessel_k integral vs series", worst, SPECIAL_TOL, where)]

    def _eigen(self) -> list[CheckResult]:
        rng = self._rng()
        results = []
        for modes in (1, 2, 3):
            alpha = _random_alpha(rng, modes)
            coeffs = SpnrCoeffs.paired(alpha, 1.0, 0.5 + 0.3j, normalize=True)
            space = SpaceConfig.adaptive(alpha)
            state = spnr_bg_state(alpha, coeffs, space)
            worst = max(
                pair_eigen_residual(state, alpha, i, j)
                for i in range(1, modes + 1)
                for j in range(i, modes + 1)
            )
            results.append(_check("eigen", f"sp(N,R) BG state N={modes}", worst, EIGEN_TOL))

        alpha = _random_alpha(rng, 2)
        inner = SpnrCoeffs.paired(alpha, 1.0, 1.0, normalize=True)
        space = SpaceConfig.adaptive(alpha)
        state = sa_cat(alpha, inner, 1.0, 0.7j, space, normalize=True)
        worst = max(
            pair_eigen_residual(state, alpha, i, j, power=2)
            for i, j in ((1, 1), (1, 2), (2, 2))
        )
        results.append(_check("eigen", "squared-amplitude cat", worst, SQUARED_EIGEN_TOL))

        alpha = _random_alpha(rng, 1)
        angles = tuple(float(a) for a in rng.uniform(0.0, 2.0 * np.pi, 2))
        space = SpaceConfig.adaptive(alpha)
        state = multi_angle_state(alpha, angles, space)
        worst = pair_eigen_residual(state, alpha, 1, 1, power=2)
        results.append(_check("eigen", "n=2 multi-angle state, a^4", worst, SQUARED_EIGEN_TOL))
        return results

    def _unity(self) -> list[CheckResult]:
        tol = self._config.get_tolerance()
        ctl = self._config.get_series_control()
        gaussian = MeasureDensity(MeasureKind.GAUSSIAN)
        rng = self._rng()
        results = []
        report = resolve_unity(FamilySpec(FamilyKind.CANONICAL), gaussian, tol=tol)
        results.append(_check("unity", "canonical CS", report.defect, tol))
        for phi in rng.uniform(0.0, 2.0 * np.pi, 3):
            report = resolve_unity(
                FamilySpec(FamilyKind.PHI_FAMILY, phi=float(phi)), gaussian, tol=tol
            )
            results.append(_check("unity", f"phi-family phi={phi:.6f}", report.defect, tol))
        for n in (1, 2):
            angles = tuple(float(a) for a in rng.uniform(0.0, 2.0 * np.pi, n))
            report = resolve_unity(
                FamilySpec(FamilyKind.N_ANGLE, angles=angles), gaussian, tol=tol
            )
            results.append(_check("unity", f"n-angle n={n}", report.defect, tol))
        for charge in (0, -1, -2):
            label = UpqLabel(1, 1, charge)
            report = resolve_unity(
                FamilySpec(FamilyKind.UPQ, mode_count=2, upq=label),
                MeasureDensity(MeasureKind.UPQ_Z, upq=label),
                tol=SECTOR_TOL,
                ctl=ctl,
            )
            results.append(_check("unity", f"u(1,1) sector l={charge}", report.defect, SECTOR_TOL))
        return results

    def _n_angle_unity(self) -> list[CheckResult]:
        tol = self._config.get_tolerance()
        seed = self._config.get_seed()
        results = []
        for n in (1, 2):
            report = n_angle_unity_check(n, seed=seed, tol=tol)
            angles = ", ".join(f"{a:.6f}" for a in report.angles)
            results.append(
                _check("theorem-a2", f"n={n}", report.defect, tol, f"seed={seed}, angles=({angles})")
            )
        return results

    def _measures(self) -> list[CheckResult]:
        quad = self._config.get_quadrature_spec()
        ctl = self._config.get_series_control()
        results = []
        for p, l in ((1, 0), (1, -3), (2, -1)):  # noqa: E741
            deviation = measure_compare(UpqLabel(p, 1, l), MEASURE_RADII, quad, ctl)
            results.append(_check("measures", f"F vs F' p={p} l={l}", deviation, MEASURE_TOL))
        return results

    def _robertson(self) -> list[CheckResult]:
        rng = self._rng()
        pairs = [
            QuadraturePair(QuadratureTarget.PAIR, 1, 1),
            QuadraturePair(QuadratureTarget.PAIR, 1, 2),
            QuadraturePair(QuadratureTarget.PAIR, 2, 2),
        ]
        results = []
        for sample in range(3):
            alpha = _random_alpha(rng, 2)
            c_minus = complex(*rng.uniform(-1.0, 1.0, 2))
            coeffs = SpnrCoeffs.paired(alpha, 1.0, c_minus, normalize=True)
            state = spnr_bg_state(alpha, coeffs, SpaceConfig.adaptive(alpha))
            matrices = robertson_matrices(state, pairs)
            scale = max(abs(matrices.det_commutator), abs(matrices.det_sigma))
            det_gap = abs(matrices.det_sigma - matrices.det_commutator) / scale
            covariance = max(abs(matrices.sigma[2 * k, 2 * k + 1]) for k in range(len(pairs)))
            results.append(_check("robertson", f"det sigma = det C, sample {sample}", det_gap, ROBERTSON_DET_TOL))
            results.append(_check("robertson", f"cov(X_ij, Y_ij) = 0, sample {sample}", covariance, ROBERTSON_COV_TOL))
        return results
