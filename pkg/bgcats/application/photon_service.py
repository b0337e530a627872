"""
Photon-number distributions and the diagnostics reported with them.

A single point yields rows (n, p_n, poisson) and a summary with <n>, Q, the
l_n/oscillation flags, the theta-minimized variances and the
nonclassicality class. A scan yields p_0..p_nmax per scan point.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Any

import numpy as np
from scipy.stats import poisson

from bgcats.adapters.logging.events import EventType
from bgcats.application.parameters import PointParams, ScanSpec
from bgcats.application.scan_service import STATUS_OK, run_points
from bgcats.domain.errors import BgcatsError, VacuumStateError
from bgcats.domain.quantum_stats import (
    TRUNCATION_TOL,
    DistributionScope,
    classify,
    family_superposition,
    is_oscillating,
    l_n_sequence,
    mandel_q,
    min_over_interval,
    moments_closed_form,
    photon_distribution,
    q_near_zero,
    variances_pq,
    variances_xy,
)
from bgcats.domain.value_objects import SpaceConfig, adaptive_cutoff
from bgcats.ports.logging_port import LoggingPort

TAIL_WARNING = 1e-12


@dataclass(frozen=True)
class PhotonSummary:
    mean_n: float
    mandel_q: float | None
    q_near_zero: bool
    oscillating: bool
    negative_l_n: bool
    min_var_p: float
    min_var_q: float
    min_var_x: float
    min_var_y: float
    nonclassicality: str
    tail_mass: float
    status: str = STATUS_OK

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


def theta_minima(point: PointParams) -> dict[str, float]:
    """Variances of mode i minimized over theta_i."""
    i = point.stats_mode

    def variances(theta: float) -> tuple[float, float, float, float]:
        moments = moments_closed_form(point.with_value("theta", theta).to_cat_params(), i)
        return (*variances_pq(moments), *variances_xy(moments))

    labels = ("min_var_p", "min_var_q", "min_var_x", "min_var_y")
    periods = (math.pi, math.pi, math.pi / 2, math.pi / 2)
    out = {}
    for index, (label, period) in enumerate(zip(labels, periods)):
        _, value = min_over_interval(
            lambda t, k=index: variances(t)[k], 0.0, period, 361
        )
        out[label] = value
    return out


class PhotonService:
    """Closed-form photon statistics of the cat families."""

    def __init__(
        self,
        logger: LoggingPort,
        workers: int = 1,
        truncation_tol: float = TRUNCATION_TOL,
    ):
        self._logger = logger
        self._workers = workers
        self._truncation_tol = truncation_tol

    def distribution(
        self,
        point: PointParams,
        n_max: int | None = None,
        scope: DistributionScope = DistributionScope.TOTAL,
        fixed: dict[int, int] | None = None,
    ) -> tuple[list[dict[str, Any]], PhotonSummary]:
        params = point.to_cat_params()
        i = point.stats_mode
        scope = DistributionScope(scope)
        if scope is DistributionScope.TOTAL:
            dist = photon_distribution(
                params, scope, n_max=n_max, truncation_tol=self._truncation_tol
            )
        else:
            space = SpaceConfig.adaptive(params.alpha)
            state = family_superposition(params).to_state(space)
            dist = photon_distribution(
                state, scope, i=i, fixed=fixed, n_max=n_max,
                truncation_tol=self._truncation_tol,
            )
        if dist.tail_mass > TAIL_WARNING:
            self._logger.log_event(
                EventType.TRUNCATION_WARNING,
                {"tail_mass": dist.tail_mass, "n_max": dist.probabilities.size - 1},
            )

        moments = moments_closed_form(params, i)
        mean = moments.total_n if scope is DistributionScope.TOTAL else dist.mean
        n = np.arange(dist.probabilities.size)
        reference = poisson.pmf(n, mean)
        rows = [
            {"n": int(k), "p_n": float(p), "poisson": float(ref)}
            for k, p, ref in zip(n, dist.probabilities, reference)
        ]

        status = STATUS_OK
        q: float | None
        try:
            q = mandel_q(dist)
        except VacuumStateError:
            q = None
            status = "vacuum"
        l_n = l_n_sequence(dist)
        summary = PhotonSummary(
            mean_n=float(mean),
            mandel_q=q,
            q_near_zero=q is not None and q_near_zero(q),
            oscillating=is_oscillating(dist),
            negative_l_n=bool((l_n < 0).any()),
            nonclassicality=classify(params).value,
            tail_mass=dist.tail_mass,
            status=status,
            **theta_minima(point),
        )
        return rows, summary

    def scan(
        self,
        base: PointParams,
        scan: ScanSpec,
        n_max: int | None = None,
        photon_number: int | None = None,
    ) -> list[dict[str, Any]]:
        """Total distribution p_0..p_nmax at every scan point."""
        for variable, value in scan.fixed.items():
            base = base.with_value(variable, value)
        points = [float(p) for p in scan.points()]
        if n_max is None:
            largest = max(
                base.with_value(scan.variable, p).to_cat_params().r_tilde
                for p in (points[0], points[-1])
            )
            n_max = adaptive_cutoff(largest)
        if photon_number is not None and not 0 <= photon_number <= n_max:
            raise ValueError(f"photon number {photon_number} outside 0..{n_max}")
        columns = [f"p_{k}" for k in range(n_max + 1)]
        self._logger.log_event(
            EventType.SCAN_STARTED,
            {"variable": scan.variable, "points": len(points), "n_max": n_max},
        )

        def evaluate(value: float) -> dict[str, Any]:
            row: dict[str, Any] = {scan.variable: value}
            try:
                params = base.with_value(scan.variable, value).to_cat_params()
                dist = photon_distribution(
                    params, DistributionScope.TOTAL, n_max=n_max,
                    truncation_tol=self._truncation_tol,
                )
                row.update(zip(columns, (float(p) for p in dist.probabilities)))
                if photon_number is not None:
                    row["curve"] = row[columns[photon_number]]
                row["status"] = STATUS_OK
            except (BgcatsError, ValueError) as exc:
                row.update(dict.fromkeys(columns))
                if photon_number is not None:
                    row["curve"] = None
                row["status"] = type(exc).__name__
                self._logger.log_event(
                    EventType.SCAN_POINT_FAILED,
                    {
                        "variable": scan.variable,
                        "value": value,
                        "error_type": type(exc).__name__,
                        "error_message": str(exc),
                    },
                )
            return row

        rows = run_points(evaluate, points, self._workers)
        failed = sum(1 for row in rows if row["status"] != STATUS_OK)
        self._logger.log_event(
            EventType.SCAN_COMPLETED, {"points": len(rows), "failed": failed}
        )
        return rows
