import math

import numpy as np
import pytest

from bgcats.domain import fock_oracle as fo
from bgcats.domain.errors import DegenerateSuperpositionError, NormalizationError
from bgcats.domain.fock_oracle import Ladder
from bgcats.domain.spnr_cats import (
    cat_phi,
    cat_phi_psi,
    cat_phi_psi_superposition,
    cat_phi_superposition,
    measured_pair_eigenvalues,
    multi_angle_state,
    multi_angle_superposition,
    pair_eigen_residual,
    phi_representation,
    phi_state,
    s_phi_apply,
    sa_cat,
    sign_pattern,
    spnr_bg_state,
    spnr_bg_superposition,
    tilde_normalization,
)
from bgcats.domain.value_objects import CatParams, SpaceConfig, SpnrCoeffs

ALPHA = (0.5 + 0.2j, 0.3 - 0.4j)
PAIRS = [(1, 1), (1, 2), (2, 2)]


@pytest.fixture
def spnr_coeffs():
    return SpnrCoeffs.paired(ALPHA, 1.0, 0.5j, normalize=True)


def test_spnr_bg_state_is_common_pair_eigenstate(spnr_coeffs, two_mode_space):
    state = spnr_bg_state(ALPHA, spnr_coeffs, two_mode_space)
    assert state.norm_squared() == pytest.approx(1.0, abs=1e-10)
    for i, j in PAIRS:
        assert pair_eigen_residual(state, ALPHA, i, j) < 1e-10
    np.testing.assert_allclose(
        measured_pair_eigenvalues(state), np.outer(ALPHA, ALPHA), atol=1e-10
    )


def test_spnr_bg_requires_normalized_coefficients():
    with pytest.raises(NormalizationError):
        spnr_bg_superposition(ALPHA, SpnrCoeffs(1.0, 1.0))


def test_spnr_bg_degenerate_superposition():
    with pytest.raises(DegenerateSuperpositionError):
        spnr_bg_superposition((1e-7,), SpnrCoeffs(1.0, -1.0))


@pytest.mark.parametrize("phi", [0.0, 0.4, math.pi / 4, 2.0])
def test_phi_state_is_s_phi_of_coherent_state(phi, two_mode_space):
    coherent = fo.coherent_state(ALPHA, two_mode_space)
    state = phi_state(ALPHA, phi, two_mode_space)
    assert fo.residual_norm(state, s_phi_apply(coherent, phi)) < 1e-12
    assert state.norm_squared() == pytest.approx(coherent.norm_squared(), abs=1e-12)


def test_sign_pattern_two_angles():
    a, b = 0.3, -1.1
    expected = np.exp(1j * np.array([a + b, -a + b, a - b, -a - b]))
    np.testing.assert_allclose(sign_pattern([a, b]), expected)


def test_multi_angle_without_angles_is_coherent(two_mode_space):
    state = multi_angle_state(ALPHA, [], two_mode_space)
    assert fo.residual_norm(state, fo.coherent_state(ALPHA, two_mode_space)) < 1e-12


def test_multi_angle_with_one_angle_is_phi_state(two_mode_space):
    state = multi_angle_state(ALPHA, [0.3], two_mode_space)
    assert fo.residual_norm(state, phi_state(ALPHA, 0.3, two_mode_space)) < 1e-12


@pytest.mark.parametrize("angles", [(0.3, -1.1), (0.2, 0.9, 2.4)])
def test_multi_angle_state_is_eigenstate_of_pair_power(angles, two_mode_space):
    state = multi_angle_state(ALPHA, angles, two_mode_space)
    power = 2 ** (len(angles) - 1)
    assert state.norm_squared() == pytest.approx(1.0, abs=1e-10)
    for i, j in PAIRS:
        assert pair_eigen_residual(state, ALPHA, i, j, power) < 1e-9


def test_multi_angle_phases_follow_sign_pattern():
    angles = (0.3, -1.1)
    sup = multi_angle_superposition((0.4,), angles)
    pattern = sign_pattern(angles)
    n = np.arange(12)
    np.testing.assert_allclose(sup.phase_factor(n), pattern[n % 4], atol=1e-14)


@pytest.mark.parametrize("phi", [0.0, 1.0, math.pi / 2, 2.5])
def test_cat_phi_is_normalized(phi, two_mode_space):
    state = cat_phi(ALPHA, phi, two_mode_space)
    assert state.norm_squared() == pytest.approx(1.0, abs=1e-10)
    assert pair_eigen_residual(state, ALPHA, 1, 2) < 1e-10


def test_even_cat_has_even_support(one_mode_space):
    state = cat_phi((1.2,), 0.0, one_mode_space)
    odd = fo.parity_projection(state, even=False)
    assert odd.norm_squared() < 1e-28


def test_cat_phi_vanishes_for_odd_phase_at_origin():
    with pytest.raises(DegenerateSuperpositionError):
        cat_phi_superposition((1e-8,), math.pi)


def test_tilde_normalization_small_amplitude_limit():
    assert tilde_normalization(0.0, 0.0) == pytest.approx(0.5)


@pytest.mark.parametrize(
    "params",
    [
        CatParams.from_radii(0.8, 0.5, theta=0.3, phi=1.1, psi=-0.7),
        CatParams.from_radii(0.55, 0.55, phi=2.246),
        CatParams.from_radii(1.4, 0.9, theta=-2.0, phi=math.pi, psi=-math.pi / 2),
    ],
)
def test_cat_phi_psi_closed_form_normalization(params):
    space = SpaceConfig.adaptive(params.alpha, mode_count=params.mode_count)
    state = cat_phi_psi(params, space)
    assert state.norm_squared() == pytest.approx(1.0, abs=1e-10)
    assert cat_phi_psi_superposition(params).norm_squared() == pytest.approx(1.0, abs=1e-12)


def test_cat_phi_psi_is_eigenstate_of_pair_squares(two_mode_space):
    params = CatParams.from_radii(0.8, 0.5, theta=0.3, phi=1.1, psi=-0.7)
    state = cat_phi_psi(params, two_mode_space)
    for i, j in PAIRS:
        assert pair_eigen_residual(state, params.alpha, i, j, power=2) < 1e-9


def test_sa_cat_is_eigenstate_of_pair_squares(spnr_coeffs, two_mode_space):
    state = sa_cat(ALPHA, spnr_coeffs, 1.0, 0.7 - 0.2j, two_mode_space, normalize=True)
    assert state.norm_squared() == pytest.approx(1.0, abs=1e-10)
    for i, j in PAIRS:
        assert pair_eigen_residual(state, ALPHA, i, j, power=2) < 1e-9


def test_sa_cat_checks_outer_normalization(spnr_coeffs, two_mode_space):
    with pytest.raises(NormalizationError):
        sa_cat(ALPHA, spnr_coeffs, 1.0, 1.0, two_mode_space)


def test_closed_form_statistics_match_truncated_state(two_mode_space):
    sup = cat_phi_psi_superposition(CatParams.from_radii(0.8, 0.5, theta=0.3, phi=1.1, psi=-0.7))
    state = sup.to_state(two_mode_space)
    np.testing.assert_allclose(
        sup.total_distribution(two_mode_space.per_mode_cutoff),
        fo.total_distribution(state),
        atol=1e-14,
    )
    words = {
        (1, 1): [(Ladder.RAISE, 1), (Ladder.LOWER, 1)],
        (0, 2): [(Ladder.LOWER, 2), (Ladder.LOWER, 2)],
        (2, 2): [(Ladder.RAISE, 1), (Ladder.RAISE, 1), (Ladder.LOWER, 1), (Ladder.LOWER, 1)],
    }
    assert sup.moment(1, 1, 1) == pytest.approx(fo.expectation(state, words[(1, 1)]), abs=1e-12)
    assert sup.moment(2, 0, 2) == pytest.approx(fo.expectation(state, words[(0, 2)]), abs=1e-12)
    assert sup.moment(1, 2, 2) == pytest.approx(fo.expectation(state, words[(2, 2)]), abs=1e-12)


def test_superposition_overlap_matches_fock_inner(spnr_coeffs, two_mode_space):
    a = spnr_bg_superposition(ALPHA, spnr_coeffs)
    b = cat_phi_superposition(ALPHA, 0.8)
    assert a.overlap(b) == pytest.approx(
        fo.inner(a.to_state(two_mode_space), b.to_state(two_mode_space)), abs=1e-12
    )


def test_phi_representation_ladder_action(two_mode_space):
    state = cat_phi(ALPHA, 0.4, two_mode_space)
    point = (0.3 - 0.2j, 0.5j)
    phi = 0.9
    raised = phi_representation(fo.create(state, 2), point, phi)
    assert raised == pytest.approx(point[1] * phi_representation(state, point, -phi), rel=1e-10)
    lowered = phi_representation(fo.annihilate(state, 1), point, phi)
    assert lowered == pytest.approx(
        phi_representation(state, point, -phi, derivative=1), rel=1e-10
    )
