import math

import numpy as np
import pytest
from scipy import stats

from bgcats.domain.errors import (
    BasisIndexError,
    CutoffInadequateError,
    DegenerateSuperpositionError,
    NormalizationError,
    SpaceMismatchError,
)
from bgcats.domain.fock_oracle import (
    Ladder,
    annihilate,
    apply_number,
    apply_pair_lowering,
    apply_word,
    charge_tensor,
    coherent_state,
    conditional_distribution,
    create,
    expectation,
    fidelity,
    fock_state,
    inner,
    marginal_distribution,
    normalized,
    parity_projection,
    residual_norm,
    total_distribution,
    vacuum,
)
from bgcats.domain.value_objects import SpaceConfig, adaptive_cutoff


def test_fock_state_rejects_occupation_above_cutoff():
    with pytest.raises(BasisIndexError):
        fock_state((3, 9), SpaceConfig(2, 8))


def test_fock_state_rejects_wrong_mode_count():
    with pytest.raises(SpaceMismatchError):
        fock_state((1,), SpaceConfig(2, 8))


def test_states_in_different_spaces_do_not_mix():
    with pytest.raises(SpaceMismatchError):
        vacuum(SpaceConfig(1, 5)) + vacuum(SpaceConfig(1, 6))


def test_ladder_operators_on_number_states():
    space = SpaceConfig(2, 6)
    state = fock_state((2, 3), space)
    lowered = annihilate(state, 2)
    raised = create(state, 1)
    assert lowered.coeffs[2, 2] == pytest.approx(math.sqrt(3))
    assert raised.coeffs[3, 3] == pytest.approx(math.sqrt(3))
    assert raised.truncation_loss == 0.0


def test_create_at_cutoff_records_lost_norm():
    space = SpaceConfig(1, 4)
    raised = create(fock_state((4,), space), 1)
    assert raised.norm_squared() == 0.0
    assert raised.truncation_loss == pytest.approx(5.0)


def test_annihilate_vacuum_is_zero():
    assert annihilate(vacuum(SpaceConfig(1, 3)), 1).norm_squared() == 0.0


def test_mode_index_out_of_range():
    with pytest.raises(ValueError):
        annihilate(vacuum(SpaceConfig(2, 3)), 3)


def test_coherent_state_is_normalized_eigenstate(two_mode_space):
    alpha = (0.6 + 0.3j, -0.4 + 0.5j)
    state = coherent_state(alpha, two_mode_space)
    assert state.norm_squared() == pytest.approx(1.0, abs=1e-12)
    for i, a in enumerate(alpha, start=1):
        assert residual_norm(annihilate(state, i), a * state) < 1e-10


def test_coherent_state_checks_cutoff():
    with pytest.raises(CutoffInadequateError):
        coherent_state((2.0,), SpaceConfig(1, 10))


def test_pair_lowering_eigenvalue(two_mode_space):
    alpha = (0.6, 0.2j)
    state = coherent_state(alpha, two_mode_space)
    lowered = apply_pair_lowering(state, 1, 2)
    assert residual_norm(lowered, alpha[0] * alpha[1] * state) < 1e-10


def test_number_operator_matches_word(one_mode_space):
    state = coherent_state((1.1 - 0.4j,), one_mode_space)
    word = [(Ladder.RAISE, 1), (Ladder.LOWER, 1)]
    assert residual_norm(apply_word(state, word), apply_number(state, 1)) < 1e-12
    assert expectation(state, word).real == pytest.approx(abs(1.1 - 0.4j) ** 2, rel=1e-10)


def test_expectation_word_length_limit(one_mode_space):
    state = vacuum(one_mode_space)
    with pytest.raises(ValueError):
        expectation(state, [(Ladder.LOWER, 1)] * 5)


def test_inner_is_conjugate_linear_in_first_slot(one_mode_space):
    a = coherent_state((0.5,), one_mode_space)
    b = coherent_state((0.3j,), one_mode_space)
    c = 0.4 - 1.2j
    assert inner(c * a, b) == pytest.approx(np.conj(c) * inner(a, b))
    assert inner(a, c * b) == pytest.approx(c * inner(a, b))


def test_fidelity_ignores_scale(one_mode_space):
    a = coherent_state((0.7,), one_mode_space)
    assert fidelity(a, (2.0 - 1.0j) * a) == pytest.approx(1.0)


def test_normalizing_zero_state_fails(one_mode_space):
    with pytest.raises(DegenerateSuperpositionError):
        normalized(0.0 * vacuum(one_mode_space))


def test_total_distribution_of_coherent_state_is_poisson(two_mode_space):
    alpha = (0.6, 0.6j)
    dist = total_distribution(coherent_state(alpha, two_mode_space))
    n = np.arange(two_mode_space.per_mode_cutoff + 1)
    np.testing.assert_allclose(dist, stats.poisson.pmf(n, 0.72), rtol=1e-10, atol=1e-16)


def test_marginal_distribution_is_poisson(two_mode_space):
    dist = marginal_distribution(coherent_state((0.6, 0.6j), two_mode_space), 2)
    n = np.arange(two_mode_space.per_mode_cutoff + 1)
    np.testing.assert_allclose(dist, stats.poisson.pmf(n, 0.36), rtol=1e-10, atol=1e-16)


def test_conditional_distribution_of_product_state(two_mode_space):
    state = coherent_state((0.6, 0.6j), two_mode_space)
    conditional = conditional_distribution(state, 1, {2: 3})
    np.testing.assert_allclose(conditional, marginal_distribution(state, 1), rtol=1e-10)


def test_conditional_distribution_rejects_scanned_mode(two_mode_space):
    with pytest.raises(ValueError):
        conditional_distribution(vacuum(two_mode_space), 1, {1: 0})


def test_conditional_distribution_on_impossible_event(two_mode_space):
    with pytest.raises(NormalizationError):
        conditional_distribution(vacuum(two_mode_space), 1, {2: 3})


def test_parity_projection_of_coherent_state(one_mode_space):
    r = 1.3
    even = parity_projection(coherent_state((r,), one_mode_space), even=True)
    odd = parity_projection(coherent_state((r,), one_mode_space), even=False)
    assert even.norm_squared() == pytest.approx(math.exp(-r * r) * math.cosh(r * r), rel=1e-10)
    assert odd.norm_squared() == pytest.approx(math.exp(-r * r) * math.sinh(r * r), rel=1e-10)


def test_charge_tensor():
    charges = charge_tensor(SpaceConfig(3, 4), 2)
    assert charges[3, 1, 0] == 4
    assert charges[0, 1, 4] == -3


def test_charge_tensor_needs_two_blocks():
    with pytest.raises(ValueError):
        charge_tensor(SpaceConfig(2, 4), 2)


@pytest.mark.parametrize(
    ("amplitude", "expected"),
    [(0.0, 15), (1.0, 24), (2.0, 35), (-1.5, 30)],
)
def test_adaptive_cutoff_rule(amplitude, expected):
    assert adaptive_cutoff(amplitude) == expected
