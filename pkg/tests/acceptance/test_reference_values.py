"""Reference values the package must reproduce."""

import cmath
import itertools
import math

import numpy as np
import pytest
from scipy.stats import poisson

from bgcats.application.scan_service import match_window
from bgcats.application.verification_service import VerificationService
from bgcats.domain import fock_oracle as fo
from bgcats.domain.quantum_stats import (
    DistributionScope,
    family_superposition,
    joint_squeezing_windows,
    l_n_sequence,
    mandel_q,
    min_over_interval,
    min_over_theta,
    moments_closed_form,
    moments_from_state,
    photon_distribution,
    variance_pq,
    variance_xy,
    variances_pq,
    variances_xy,
)
from bgcats.domain.spnr_cats import phi_state, spnr_bg_state
from bgcats.domain.su11_bg import bg_reconstruct_two_mode
from bgcats.domain.upq_cs import decompose_spnr, resum_sectors
from bgcats.domain.value_objects import CatParams, SpaceConfig, SpnrCoeffs, StateFamily

# Reference bounds are given to two decimals.
BOUND_SLACK = 0.005


def cat(r_tilde, phi, psi, theta=0.0, r_i=None):
    return CatParams.from_radii(r_tilde, r_tilde if r_i is None else r_i, theta, phi, psi)


def theta_minimum(r_tilde, phi, psi, pick):
    return min_over_theta(
        lambda t: pick(moments_closed_form(cat(r_tilde, phi, psi, theta=t)))
    )[1]


# ----------------------------------------------------------- squeezing


@pytest.mark.parametrize(("index", "where"), [(0, 3.131), (1, 3.153)])
def test_small_amplitude_squeezing_minimum(index, where):
    def variance(psi):
        return variance_pq(cat(0.05, 0.0, psi, theta=math.pi / 4))[index]

    psi, value = min_over_interval(variance, 2.9, 3.4, 2001)
    assert value == pytest.approx(0.275, abs=0.005)
    assert psi == pytest.approx(where, abs=0.02)


@pytest.mark.slow
@pytest.mark.parametrize("index", [0, 1])
def test_phi_family_squeezing_minimum(index):
    def over_theta(phi):
        def variance(theta):
            params = CatParams((cmath.rect(0.5, theta),), phi=phi, family=StateFamily.PHI_FAMILY)
            return variance_pq(params)[index]

        return min_over_interval(variance, 0.0, math.pi, 91)[1]

    _, value = min_over_interval(over_theta, 0.0, math.pi, 61)
    assert value == pytest.approx(0.5 - 0.5 * math.exp(-1.0), abs=1e-6)
    assert value == pytest.approx(0.316, abs=0.005)


def test_squared_amplitude_squeezing_minimum():
    def variance(psi):
        return variance_xy(cat(0.88, 0.0, psi, theta=math.pi / 4))[0]

    _, value = min_over_interval(variance, 0.0, 2.0 * math.pi, 1441)
    assert value == pytest.approx(0.69, abs=0.01)


def test_joint_squeezing_window():
    windows = joint_squeezing_windows(0.8, math.pi / 4, 0.0, -1.0, 8.0, 1801)
    assert windows
    matched = [match_window(w) for w in windows if match_window(w)]
    assert matched == [(6.4, 7.4)]


# ------------------------------------------------------ photon statistics


@pytest.mark.parametrize(
    ("n", "phi", "psi"),
    [(1, math.pi, -math.pi / 2), (2, 0.0, math.pi), (3, math.pi, math.pi / 2)],
)
def test_fock_limit(n, phi, psi):
    p = photon_distribution(cat(0.5, phi, psi)).probabilities
    assert p[n] >= 0.99995


def test_oscillating_super_poissonian_point():
    params = cat(0.8, 0.0, 7.3)
    p = photon_distribution(params).probabilities
    assert mandel_q(p) > 0
    assert np.all(p[1::2] < 1e-15)
    assert theta_minimum(0.8, 0.0, 7.3, lambda m: variances_pq(m)[0]) >= 0.38 - BOUND_SLACK
    assert theta_minimum(0.8, 0.0, 7.3, lambda m: variances_xy(m)[0]) >= 0.73


def test_large_amplitude_sub_poissonian_point():
    p = photon_distribution(cat(2.2, math.pi, -math.pi / 2)).probabilities
    assert mandel_q(p) < 0
    off_support = [p[k] for k in range(p.size) if k % 4 != 1]
    assert max(off_support) < 1e-15


def test_small_amplitude_sub_poissonian_point():
    params = cat(0.55, 2.246, 0.0)
    assert mandel_q(photon_distribution(params)) < 0
    assert theta_minimum(0.55, 2.246, 0.0, lambda m: variances_pq(m)[1]) >= 0.5 - BOUND_SLACK
    assert theta_minimum(0.55, 2.246, 0.0, lambda m: variances_xy(m)[0]) >= 1.0


def test_near_poissonian_point():
    params = cat(0.55, 2.234384, 0.0)
    q = mandel_q(photon_distribution(params))
    assert abs(q) < 1e-3
    assert moments_closed_form(params).total_n == pytest.approx(0.685, abs=0.002)


# ------------------------------------------------------ oracle agreement

GRID = list(
    itertools.product(
        (0.3, 1.0, 1.7, 2.4, 3.0),
        (0.3, 1.1, 2.0, 2.9, 4.4),
        (-1.2, 0.4, 1.9, 3.5, 5.6),
    )
)


@pytest.mark.slow
@pytest.mark.parametrize(("r_tilde", "phi", "psi"), GRID)
def test_closed_forms_match_truncated_oracle(r_tilde, phi, psi):
    params = cat(r_tilde, phi, psi, theta=0.7)
    state = family_superposition(params).to_state(SpaceConfig.adaptive(params.alpha))
    closed = moments_closed_form(params)
    oracle = moments_from_state(state)
    assert closed.mean_n == pytest.approx(oracle.mean_n, abs=1e-8)
    np.testing.assert_allclose(variances_pq(closed), variances_pq(oracle), rtol=0, atol=1e-8)
    np.testing.assert_allclose(variances_xy(closed), variances_xy(oracle), rtol=0, atol=1e-8)


# ---------------------------------------------------- verification suites


@pytest.mark.parametrize("suite", ["eigen", "special", "measures", "robertson"])
def test_verification_suite(config, silent_logger, suite):
    results = VerificationService(config, silent_logger).run(suite)
    assert results
    assert all(r.passed for r in results), [r.to_dict() for r in results if not r.passed]


@pytest.mark.slow
@pytest.mark.parametrize("suite", ["unity", "theorem-a2"])
def test_resolution_of_unity_suites(config, silent_logger, suite):
    results = VerificationService(config, silent_logger).run(suite)
    assert all(r.passed for r in results), [r.to_dict() for r in results if not r.passed]


# ------------------------------------------------------ Poisson reference


def test_poisson_diagnostics(rng):
    reference = poisson.pmf(np.arange(40), 1.7)
    assert np.max(np.abs(l_n_sequence(reference))) < 1e-12
    coherent = CatParams((0.9 - 0.4j,), family=StateFamily.COHERENT)
    assert mandel_q(photon_distribution(coherent)) == pytest.approx(0.0, abs=1e-10)

    for _ in range(3):
        alpha = tuple(complex(*rng.uniform(-0.5, 0.5, 2)) for _ in range(2))
        phi = float(rng.uniform(0.0, 2.0 * math.pi))
        state = phi_state(alpha, phi, SpaceConfig.adaptive(alpha))
        for i, a in enumerate(alpha, start=1):
            marginal = photon_distribution(state, DistributionScope.PER_MODE, i=i).probabilities
            expected = poisson.pmf(np.arange(marginal.size), abs(a) ** 2)
            np.testing.assert_allclose(marginal, expected, rtol=0, atol=1e-10)


# ------------------------------------------------ two-mode correspondence


def test_two_mode_coherent_state_from_bg_components():
    space = SpaceConfig(2, 24)
    rebuilt = bg_reconstruct_two_mode(0.6, 0.3, 6, space)
    assert fo.fidelity(rebuilt, fo.coherent_state((0.6, 0.3), space)) >= 1 - 1e-8


def test_spnr_state_from_u11_sectors():
    alpha = (0.6, 0.3)
    space = SpaceConfig.adaptive(alpha)
    coeffs = SpnrCoeffs.paired(alpha, 1.0, 0.5j, normalize=True)
    terms = decompose_spnr(alpha, coeffs, 12, space)
    assert fo.fidelity(resum_sectors(terms), spnr_bg_state(alpha, coeffs, space)) >= 1 - 1e-8
