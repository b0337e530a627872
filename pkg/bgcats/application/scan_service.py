"""
Parameter scans of quadrature variances.

Scan points are independent and are evaluated on a thread pool; rows come
back in scan order. A point whose evaluation raises becomes a row with empty
numeric cells and the exception name in the status column.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from typing import Any

from bgcats.adapters.logging.events import EventType
from bgcats.application.parameters import PointParams, ScanSpec
from bgcats.domain.errors import BgcatsError
from bgcats.domain.quantum_stats import (
    family_superposition,
    joint_squeezing_windows,
    variance_pq,
    variance_pq_from_state,
    variance_xy,
    variance_xy_from_state,
)
from bgcats.domain.value_objects import SpaceConfig, StateFamily
from bgcats.ports.logging_port import LoggingPort

STATUS_OK = "ok"
VARIANCE_COLUMNS = {"pq": ("var_p", "var_q"), "XY": ("var_x", "var_y")}
# Reference locations of the joint X/p squeezing window at r_i = r~ = 0.8; they disagree.
JOINT_WINDOW_VARIANTS: tuple[tuple[float, float], ...] = ((6.4, 7.4), (-0.72, -0.1))
WINDOW_MATCH_TOL = 0.1


def run_points(
    evaluate: Callable[[float], dict[str, Any]],
    points: list[float],
    workers: int,
) -> list[dict[str, Any]]:
    """Evaluate scan points concurrently, keeping scan order."""
    if workers <= 1:
        return [evaluate(p) for p in points]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(evaluate, points))


def match_window(
    window: tuple[float, float], tol: float = WINDOW_MATCH_TOL
) -> tuple[float, float] | None:
    """The reference variant both of whose endpoints lie within tol of the window."""
    for variant in JOINT_WINDOW_VARIANTS:
        if abs(window[0] - variant[0]) <= tol and abs(window[1] - variant[1]) <= tol:
            return variant
    return None


class ScanService:
    """Sweeps one parameter and tabulates (Delta^2 p, Delta^2 q) or (Delta^2 X, Delta^2 Y)."""

    def __init__(self, logger: LoggingPort, workers: int = 1):
        self._logger = logger
        self._workers = workers

    def scan_variance(
        self,
        base: PointParams,
        scan: ScanSpec,
        which: str = "pq",
        curve: str | None = None,
        factor: float = 1.0,
        oracle_cutoff: int | None = None,
    ) -> list[dict[str, Any]]:
        """One row per scan point.

        With oracle_cutoff set, every point is also measured on the truncated
        Fock state with that per-mode cutoff (columns prefixed "oracle_").
        """
        if which not in VARIANCE_COLUMNS:
            raise ValueError(f"which must be 'pq' or 'XY', got {which!r}")
        columns = VARIANCE_COLUMNS[which]
        if curve is not None and curve not in columns:
            raise ValueError(f"curve {curve!r} is not one of {columns}")
        if oracle_cutoff is not None and oracle_cutoff < 1:
            raise ValueError(f"oracle_cutoff must be >= 1, got {oracle_cutoff}")
        for variable, value in scan.fixed.items():
            base = base.with_value(variable, value)
        variance = variance_pq if which == "pq" else variance_xy
        measured = variance_pq_from_state if which == "pq" else variance_xy_from_state
        value_columns = columns
        if oracle_cutoff is not None:
            value_columns = columns + tuple(f"oracle_{c}" for c in columns)
        points = [float(p) for p in scan.points()]
        self._logger.log_event(
            EventType.SCAN_STARTED,
            {"variable": scan.variable, "points": len(points), "which": which},
        )

        def evaluate(value: float) -> dict[str, Any]:
            row: dict[str, Any] = {scan.variable: value}
            try:
                point = base.with_value(scan.variable, value)
                params = point.to_cat_params()
                first, second = variance(params, point.stats_mode)
                row.update({columns[0]: first, columns[1]: second})
                if oracle_cutoff is not None:
                    space = SpaceConfig(params.mode_count, oracle_cutoff)
                    state = family_superposition(params).to_state(space)
                    first, second = measured(state, point.stats_mode)
                    row.update({value_columns[2]: first, value_columns[3]: second})
                if curve is not None:
                    row["curve"] = factor * row[curve]
                row["status"] = STATUS_OK
            except (BgcatsError, ValueError) as exc:
                row.update({column: None for column in value_columns})
                if curve is not None:
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

    def joint_windows(
        self, base: PointParams, scan: ScanSpec, tol: float = WINDOW_MATCH_TOL
    ) -> list[dict[str, Any]] | None:
        """psi-windows of joint X and p squeezing when the scan allows one.

        Applies to psi scans of |alpha,phi,psi> with only mode i excited.
        """
        r_i = base.r_tilde if base.r_i is None else base.r_i
        if (
            scan.variable != "psi"
            or base.family is not StateFamily.CAT_PHI_PSI
            or base.alpha is not None
            or not math.isclose(r_i, base.r_tilde)
        ):
            return None
        windows = joint_squeezing_windows(
            base.r_tilde, base.theta, base.phi, scan.start, scan.stop, scan.steps
        )
        report = []
        for window in windows:
            variant = match_window(window, tol)
            entry = {
                "start": window[0],
                "stop": window[1],
                "matches": list(variant) if variant else None,
            }
            report.append(entry)
            self._logger.log_event(EventType.WINDOW_REPORTED, entry)
        return report
