import io
import json

import pytest

from bgcats.adapters.config import InMemoryConfigAdapter
from bgcats.adapters.logging import StructuredLogger
from bgcats.application.verification_service import SUITES, VerificationService
from bgcats.domain.value_objects import SeriesControl


def test_special_suite_passes(config, silent_logger):
    results = VerificationService(config, silent_logger).run("special")
    assert len(results) == 1
    assert results[0].passed
    assert results[0].suite == "special"


def test_n_angle_suite_reports_seed(silent_logger):
    config = InMemoryConfigAdapter(seed=7)
    results = VerificationService(config, silent_logger).run("theorem-a2")
    assert [r.name for r in results] == ["n=1", "n=2"]
    assert {r.suite for r in results} == {"theorem-a2"}
    assert all(r.passed for r in results)
    assert all(r.detail.startswith("seed=7") for r in results)


def test_measures_suite_passes(config, silent_logger):
    results = VerificationService(config, silent_logger).run("measures")
    assert len(results) == 3
    assert all(r.passed for r in results)


def test_eigen_suite_passes(config, silent_logger):
    results = VerificationService(config, silent_logger).run("eigen")
    assert len(results) == 5
    assert all(r.passed for r in results), [r.to_dict() for r in results if not r.passed]


def test_unknown_suite(config, silent_logger):
    with pytest.raises(ValueError, match="Unknown suite"):
        VerificationService(config, silent_logger).run("everything")


def test_domain_failure_becomes_failed_check():
    stream = io.StringIO()
    config = InMemoryConfigAdapter(series=SeriesControl(max_terms=2))
    results = VerificationService(config, StructuredLogger(stream)).run("special")
    assert len(results) == 1
    assert results[0].name == "suite"
    assert not results[0].passed
    assert results[0].detail.startswith("NonConvergenceError")
    events = [json.loads(line)["event"] for line in stream.getvalue().splitlines()]
    assert events == ["error", "CHECK_FAILED", "SUITE_COMPLETED"]


def test_check_results_are_logged(config):
    stream = io.StringIO()
    VerificationService(config, StructuredLogger(stream)).run("measures")
    entries = [json.loads(line) for line in stream.getvalue().splitlines()]
    assert [e["event"] for e in entries] == ["CHECK_PASSED"] * 3 + ["SUITE_COMPLETED"]
    assert entries[0]["context"] == {"suite": "measures"}
    assert entries[-1]["failed"] == 0


@pytest.mark.slow
def test_all_suites_pass(config, silent_logger):
    results = VerificationService(config, silent_logger).run("all")
    assert {r.suite for r in results} == set(SUITES)
    failed = [r.to_dict() for r in results if not r.passed]
    assert not failed


def test_n_angle_is_an_alias_of_theorem_a2(silent_logger):
    config = InMemoryConfigAdapter(seed=7)
    aliased = VerificationService(config, silent_logger).run("n-angle")
    named = VerificationService(config, silent_logger).run("theorem-a2")
    assert [r.to_dict() for r in aliased] == [r.to_dict() for r in named]
