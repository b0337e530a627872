import io
import json
import math

import pytest

from bgcats.adapters.logging import StructuredLogger
from bgcats.application.parameters import PointParams, ScanSpec
from bgcats.application.photon_service import PhotonService
from bgcats.domain.errors import TruncationMassError
from bgcats.domain.quantum_stats import DistributionScope


def test_even_cat_summary(silent_logger):
    rows, summary = PhotonService(silent_logger).distribution(PointParams(r_tilde=0.8, psi=7.3))
    assert summary.mean_n == pytest.approx(0.1450, abs=1e-3)
    assert summary.mandel_q == pytest.approx(1.22, rel=0.02)
    assert summary.oscillating
    assert summary.min_var_p == pytest.approx(0.378, abs=3e-3)
    assert summary.min_var_x == pytest.approx(0.936, abs=3e-3)
    assert summary.status == "ok"
    assert sum(row["p_n"] for row in rows) == pytest.approx(1.0, abs=1e-10)
    assert max(row["p_n"] for row in rows if row["n"] % 2) < 1e-15


def test_q_near_zero_point(silent_logger):
    _, summary = PhotonService(silent_logger).distribution(
        PointParams(r_tilde=0.55, phi=2.234384)
    )
    assert summary.mean_n == pytest.approx(0.6852, abs=1e-3)
    assert summary.q_near_zero
    assert summary.to_dict()["q_near_zero"] is True


def test_coherent_rows_are_poissonian(silent_logger):
    rows, summary = PhotonService(silent_logger).distribution(
        PointParams(family="coherent", r_tilde=0.8276472678623424)
    )
    for row in rows:
        assert row["p_n"] == pytest.approx(row["poisson"], abs=1e-12)
    assert summary.mandel_q == pytest.approx(0.0, abs=1e-9)
    assert summary.nonclassicality == "classical"


def test_vacuum_has_no_q(silent_logger):
    rows, summary = PhotonService(silent_logger).distribution(
        PointParams(family="coherent", r_tilde=0.0)
    )
    assert summary.status == "vacuum"
    assert summary.mandel_q is None
    assert not summary.q_near_zero
    assert rows[0]["p_n"] == pytest.approx(1.0)


def test_per_mode_distribution(silent_logger):
    point = PointParams(family="phi-family", r_tilde=1.0, r_i=0.6)
    rows, summary = PhotonService(silent_logger).distribution(
        point, scope=DistributionScope.PER_MODE
    )
    assert summary.mean_n == pytest.approx(0.36, abs=1e-9)
    assert rows[1]["p_n"] == pytest.approx(0.36 * math.exp(-0.36), abs=1e-9)


def test_scan_columns_and_curve(silent_logger):
    base = PointParams(phi=math.pi, psi=-math.pi / 2)
    rows = PhotonService(silent_logger).scan(
        base, ScanSpec("r_tilde", 0.1, 1.0, 4), photon_number=1
    )
    assert len(rows) == 4
    assert list(rows[0]) == ["r_tilde", *[f"p_{k}" for k in range(25)], "curve", "status"]
    for row in rows:
        assert row["curve"] == row["p_1"]
        assert row["status"] == "ok"


def test_scan_failure_is_reported():
    stream = io.StringIO()
    rows = PhotonService(StructuredLogger(stream)).scan(
        PointParams(family="cat-phi", phi=math.pi), ScanSpec("r_tilde", 0.0, 1.0, 3), n_max=10
    )
    assert rows[0]["status"] == "DegenerateSuperpositionError"
    assert rows[0]["p_0"] is None
    events = [json.loads(line)["event"] for line in stream.getvalue().splitlines()]
    assert "SCAN_POINT_FAILED" in events


def test_photon_number_out_of_range(silent_logger):
    with pytest.raises(ValueError, match="photon number"):
        PhotonService(silent_logger).scan(
            PointParams(), ScanSpec("r_tilde", 0.1, 0.5, 3), n_max=10, photon_number=11
        )


def test_truncation_tolerance_is_configurable(silent_logger):
    point = PointParams(r_tilde=0.8, psi=7.3)
    with pytest.raises(TruncationMassError):
        PhotonService(silent_logger).distribution(point, n_max=2)
    rows, summary = PhotonService(silent_logger, truncation_tol=0.5).distribution(point, n_max=2)
    assert len(rows) == 3
    assert 0.0 < summary.tail_mass < 0.5
