"""su(1,1) Barut-Girardello coherent states.

|z;k> = N_BG sum_n z^n / sqrt(n! Gamma(2k+n)) |n+k,k>,  K_-|z;k> = z|z;k>,
N_BG = sqrt(Gamma(2k) / 0F1(;2k;|z|^2)).

The unnormalized ||z;k> (N_BG dropped) is what the resolution of unity and
the analytic representation F_BG(z,k;Psi) = <z*;k||Psi> use.

Boson realizations:
  one-mode  K_- = a^2/2, k = 1/4 (even levels), k = 3/4 (odd levels)
  two-mode  K_- = a_1 a_2, k = (1+|l|)/2, |n+k,k> -> |n+l,n> for l > 0,
            |n,n+|l|> for l <= 0, with l = n_1 - n_2.
"""

from __future__ import annotations

import math
from collections.abc import Mapping
from enum import Enum

import numpy as np
from scipy import special

from bgcats.domain import fock_oracle as fo
from bgcats.domain.errors import (
    CutoffInadequateError,
    DomainError,
    NonConvergenceError,
    RealizationMismatchError,
    SpaceMismatchError,
)
from bgcats.domain.special_fns import (
    DEFAULT_SERIES,
    bessel_i,
    bessel_k,
    hyp0f1,
)
from bgcats.domain.value_objects import (
    BgLabel,
    Realization,
    SeriesControl,
    SpaceConfig,
)

# Relative agreement demanded of the two closed forms of N_BG.
NORMALIZATION_CROSSCHECK_TOL = 1e-8


class DiffOp(str, Enum):
    K_PLUS = "K+"
    K_MINUS = "K-"
    K_3 = "K3"


def bg_normalization(
    z: complex, k: float, ctl: SeriesControl = DEFAULT_SERIES
) -> float:
    """N_BG from the 0F1 form, checked against |z|^(k-1/2) / sqrt(I_{2k-1}(2|z|))."""
    r = abs(complex(z))
    value = math.sqrt(special.gamma(2.0 * k) / float(hyp0f1(2.0 * k, r * r, ctl)))
    if r > 0:
        bessel_form = r ** (k - 0.5) / math.sqrt(bessel_i(2.0 * k - 1.0, 2.0 * r, ctl))
        if abs(bessel_form - value) > NORMALIZATION_CROSSCHECK_TOL * value:
            raise NonConvergenceError(
                f"N_BG forms disagree at |z|={r}, k={k}: {value!r} vs {bessel_form!r}"
            )
    return value


def monomial_coefficients(z: complex, k: float, n_terms: int) -> np.ndarray:
    """z^n / sqrt(n! Gamma(2k+n)) for n = 0..n_terms-1."""
    if n_terms < 1:
        raise ValueError(f"n_terms must be >= 1, got {n_terms}")
    z = complex(z)
    out = np.empty(n_terms, dtype=complex)
    out[0] = 1.0 / math.sqrt(special.gamma(2.0 * k))
    for n in range(1, n_terms):
        out[n] = out[n - 1] * z / math.sqrt(n * (2.0 * k + n - 1.0))
    return out


def bg_coefficients(
    label: BgLabel, n_terms: int, ctl: SeriesControl = DEFAULT_SERIES
) -> np.ndarray:
    """Normalized coefficients of |z;k> over |n+k,k>, n = 0..n_terms-1."""
    return bg_normalization(label.z, label.k, ctl) * monomial_coefficients(
        label.z, label.k, n_terms
    )


def _levels(label: BgLabel, space: SpaceConfig) -> list[tuple[int, ...]]:
    """Fock occupations carrying |n+k,k>, n = 0, 1, ... inside the cutoff."""
    cutoff = space.per_mode_cutoff
    if label.realization is Realization.ONE_MODE:
        if space.mode_count != 1:
            raise RealizationMismatchError("One-mode realization needs a one-mode space")
        offset = 0 if label.k == 0.25 else 1
        return [(2 * n + offset,) for n in range((cutoff - offset) // 2 + 1)]
    if label.realization is Realization.TWO_MODE:
        if space.mode_count != 2:
            raise RealizationMismatchError("Two-mode realization needs a two-mode space")
        charge = label.sector_charge
        span = abs(charge)
        if span > cutoff:
            raise CutoffInadequateError(f"Charge {charge} does not fit cutoff {cutoff}")
        if charge > 0:
            return [(n + span, n) for n in range(cutoff - span + 1)]
        return [(n, n + span) for n in range(cutoff - span + 1)]
    raise RealizationMismatchError("Abstract labels have no Fock embedding")


def embed(
    label: BgLabel, coefficients: np.ndarray, space: SpaceConfig
) -> fo.TruncatedState:
    """Place a coefficient sequence over |n+k,k> into the Fock space of the realization."""
    levels = _levels(label, space)
    coeffs = np.zeros(space.shape, dtype=complex)
    for level, value in zip(levels, coefficients):
        coeffs[level] = value
    return fo.TruncatedState(space, coeffs)


def bg_unnormalized_state(label: BgLabel, space: SpaceConfig) -> fo.TruncatedState:
    """||z;k> embedded in Fock space."""
    levels = _levels(label, space)
    return embed(label, monomial_coefficients(label.z, label.k, len(levels)), space)


def bg_state(
    label: BgLabel,
    space: SpaceConfig,
    truncation_tol: float = 1e-10,
    ctl: SeriesControl = DEFAULT_SERIES,
) -> fo.TruncatedState:
    """|z;k> in the one- or two-mode realization."""
    levels = _levels(label, space)
    coefficients = bg_coefficients(label, len(levels), ctl)
    tail = 1.0 - float(np.sum(np.abs(coefficients) ** 2))
    if tail > truncation_tol:
        raise CutoffInadequateError(
            f"Cutoff {space.per_mode_cutoff} leaves mass {tail:.3e} of |z={label.z};"
            f"k={label.k}> outside the space"
        )
    return embed(label, coefficients, space)


def bg_overlap(
    z1: complex, z2: complex, k: float, ctl: SeriesControl = DEFAULT_SERIES
) -> complex:
    """<k;z1|z2;k> = 0F1(;2k;z1* z2) / sqrt(0F1(;2k;|z1|^2) 0F1(;2k;|z2|^2))."""
    z1, z2 = complex(z1), complex(z2)
    cross = complex(hyp0f1(2.0 * k, z1.conjugate() * z2, ctl))
    left = float(hyp0f1(2.0 * k, abs(z1) ** 2, ctl))
    right = float(hyp0f1(2.0 * k, abs(z2) ** 2, ctl))
    return cross / math.sqrt(left * right)


def bg_measure_density(
    r: float, k: float, ctl: SeriesControl = DEFAULT_SERIES
) -> float:
    """Weight of d^2z resolving unity with ||z;k>: (2/pi) r^(2k-1) K_{2k-1}(2r)."""
    if not r > 0:
        raise DomainError(f"Measure density is evaluated for |z| > 0, got {r}")
    return 2.0 / math.pi * r ** (2.0 * k - 1.0) * bessel_k(2.0 * k - 1.0, 2.0 * r, ctl)


def bg_diffop_apply(op: DiffOp, poly: np.ndarray, k: float) -> np.ndarray:
    """Action on a polynomial in z given by its coefficients.

    K_+ = z, K_- = 2k d/dz + z d^2/dz^2, K_3 = k + z d/dz. K_+ returns one more
    coefficient than it receives.
    """
    poly = np.asarray(poly, dtype=complex)
    n = np.arange(poly.size)
    op = DiffOp(op)
    if op is DiffOp.K_PLUS:
        return np.concatenate(([0.0 + 0j], poly))
    if op is DiffOp.K_3:
        return (k + n) * poly
    out = np.zeros_like(poly)
    out[:-1] = (n[1:] * (2.0 * k + n[1:] - 1.0)) * poly[1:]
    return out


def realization_apply(
    op: DiffOp, realization: Realization, state: fo.TruncatedState
) -> fo.TruncatedState:
    """K_+, K_- or K_3 of the one-mode or two-mode boson realization."""
    op = DiffOp(op)
    if realization is Realization.ONE_MODE:
        if op is DiffOp.K_MINUS:
            return 0.5 * fo.annihilate(fo.annihilate(state, 1), 1)
        if op is DiffOp.K_PLUS:
            return 0.5 * fo.create(fo.create(state, 1), 1)
        return 0.5 * (fo.apply_number(state, 1) + 0.5 * state)
    if realization is Realization.TWO_MODE:
        if op is DiffOp.K_MINUS:
            return fo.apply_pair_lowering(state, 1, 2)
        if op is DiffOp.K_PLUS:
            return fo.create(fo.create(state, 2), 1)
        return 0.5 * (fo.apply_number(state, 1) + fo.apply_number(state, 2) + state)
    raise RealizationMismatchError("Abstract labels have no boson realization")


def casimir_residual(
    label: BgLabel, space: SpaceConfig, truncation_tol: float = 1e-10
) -> float:
    """||(K_3^2 - (K_-K_+ + K_+K_-)/2 - k(k-1)) |z;k>||."""
    psi = bg_state(label, space, truncation_tol)
    real = label.realization

    def apply(op: DiffOp, s: fo.TruncatedState) -> fo.TruncatedState:
        return realization_apply(op, real, s)

    k3_sq = apply(DiffOp.K_3, apply(DiffOp.K_3, psi))
    minus_plus = apply(DiffOp.K_MINUS, apply(DiffOp.K_PLUS, psi))
    plus_minus = apply(DiffOp.K_PLUS, apply(DiffOp.K_MINUS, psi))
    casimir = k3_sq - 0.5 * (minus_plus + plus_minus)
    return fo.residual_norm(casimir, label.k * (label.k - 1.0) * psi)


def bg_representation(
    state: fo.TruncatedState,
    z: complex,
    k: float,
    realization: Realization = Realization.TWO_MODE,
    charge: int | None = None,
) -> complex:
    """F_BG(z,k;Psi) = sum_n z^n / sqrt(n! Gamma(2k+n)) <n+k,k|Psi>."""
    label = BgLabel(z, k, realization, charge)
    levels = _levels(label, state.space)
    monomials = monomial_coefficients(z, k, len(levels))
    amplitudes = np.array([state.coeffs[level] for level in levels])
    return complex(np.sum(monomials * amplitudes))


def ccs_representation(state: fo.TruncatedState, alpha: list[complex]) -> complex:
    """F_CCS(alpha;Psi) = sum_n prod_i alpha_i^n_i / sqrt(n_i!) psi_n."""
    if len(alpha) != state.space.mode_count:
        raise SpaceMismatchError("alpha length does not match the space")
    profile = fo.product_tensor(
        fo.single_mode_profile(a, state.space.per_mode_cutoff) for a in alpha
    )
    return complex(np.sum(profile * state.coeffs))


def ccs_from_bg_one_mode(
    f_quarter: complex, f_three_quarter: complex, alpha: complex
) -> complex:
    """F_CCS(alpha) = pi^(1/4) [F_BG(alpha^2/2, 1/4) + alpha/sqrt(2) F_BG(alpha^2/2, 3/4)]."""
    return math.pi**0.25 * (
        complex(f_quarter) + complex(alpha) / math.sqrt(2.0) * complex(f_three_quarter)
    )


def ccs_from_bg_two_mode(
    components: Mapping[float, complex | tuple[complex, complex]],
    alpha1: complex,
    alpha2: complex,
) -> complex:
    """F_CCS(alpha_1, alpha_2) from F_BG components at z = alpha_1 alpha_2.

    `components[k]` is F_BG(z, k) for k = 1/2, and for k > 1/2 either the pair
    (F on the l = 2k-1 branch, F on the l = -(2k-1) branch) or one value shared
    by both branches.
    """
    alpha1, alpha2 = complex(alpha1), complex(alpha2)
    total = 0j
    for k, value in components.items():
        power = int(round(2.0 * k)) - 1
        if power == 0:
            if isinstance(value, tuple):
                raise ValueError("k = 1/2 has a single branch")
            total += complex(value)
            continue
        plus, minus = value if isinstance(value, tuple) else (value, value)
        total += alpha1**power * complex(plus) + alpha2**power * complex(minus)
    return total


def bg_reconstruct_two_mode(
    alpha1: complex, alpha2: complex, k_max: float, space: SpaceConfig
) -> fo.TruncatedState:
    """e^{-|alpha|^2/2} [||z;1/2> + sum_k (alpha_1^{2k-1} ||z;k>_+ + alpha_2^{2k-1} ||z;k>_-)]."""
    alpha1, alpha2 = complex(alpha1), complex(alpha2)
    z = alpha1 * alpha2
    max_charge = min(int(round(2.0 * k_max)) - 1, space.per_mode_cutoff)
    total = bg_unnormalized_state(BgLabel(z, 0.5, Realization.TWO_MODE), space)
    for span in range(1, max_charge + 1):
        k = 0.5 * (span + 1)
        plus = bg_unnormalized_state(BgLabel(z, k, Realization.TWO_MODE, span), space)
        minus = bg_unnormalized_state(BgLabel(z, k, Realization.TWO_MODE, -span), space)
        total = total + alpha1**span * plus + alpha2**span * minus
    return math.exp(-0.5 * (abs(alpha1) ** 2 + abs(alpha2) ** 2)) * total


def project_charge_sector(
    state: fo.TruncatedState, l: int, p: int, q: int  # noqa: E741
) -> fo.TruncatedState:
    """Component of `state` with n_1+...+n_p - n_{p+1}-...-n_N = l."""
    if p + q != state.space.mode_count:
        raise ValueError(f"p + q = {p + q} does not match {state.space.mode_count} modes")
    mask = fo.charge_tensor(state.space, p) == l
    return state.with_coeffs(np.where(mask, state.coeffs, 0.0))
