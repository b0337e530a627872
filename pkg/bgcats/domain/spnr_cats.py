"""sp(N,R) Barut-Girardello states and their cat superpositions.

Every family here is a finite superposition sum_k w_k |omega_k alpha> of
rotated canonical coherent states, |omega_k| = 1. Norms, overlaps, photon
distributions and normal-ordered single-mode moments of such superpositions
have closed forms, which `CoherentSuperposition` provides; `to_state` gives the
truncated-Fock version used by the oracle checks.

Families:
  spnr_bg      C+|alpha> + C-|-alpha>
  phi          cos(phi)|alpha> + i sin(phi)|-alpha> = S(phi)|alpha>
  multi_angle  prod_k exp(i phi_k R_k)|alpha>, R_k = (-1)^floor(n_tot / 2^(k-1))
  cat_phi      N~(|alpha> + e^{i phi}|-alpha>)
  cat_phi_psi  N N~(|alpha> + e^{i phi}|-alpha> + e^{i psi}|i alpha> + e^{i(psi-phi)}|-i alpha>)
  sa_cat       D+(C+|alpha> + C-|-alpha>) + D-(C+|-i alpha> + C-|i alpha>)
"""

from __future__ import annotations

import cmath
import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from scipy.stats import poisson

from bgcats.domain import fock_oracle as fo
from bgcats.domain.errors import (
    DegenerateSuperpositionError,
    NormalizationError,
    SpaceMismatchError,
)
from bgcats.domain.value_objects import (
    CatParams,
    ModeIndex,
    SpaceConfig,
    SpnrCoeffs,
    as_mode,
)

DEGENERACY_EPS = 1e-12
NORMALIZATION_TOL = 1e-10

_QUARTER_TURNS = (1.0 + 0j, -1.0 + 0j, 1j, -1j)


@dataclass(frozen=True, eq=False)
class CoherentSuperposition:
    """sum_k weights[k] |rotations[k] * alpha>."""

    alpha: tuple[complex, ...]
    weights: tuple[complex, ...]
    rotations: tuple[complex, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", tuple(complex(a) for a in self.alpha))
        object.__setattr__(self, "weights", tuple(complex(w) for w in self.weights))
        object.__setattr__(self, "rotations", tuple(complex(w) for w in self.rotations))
        if len(self.weights) != len(self.rotations):
            raise ValueError("weights and rotations must have equal length")
        if any(abs(abs(w) - 1.0) > 1e-12 for w in self.rotations):
            raise ValueError("rotations must be unimodular")

    @property
    def r_tilde_sq(self) -> float:
        return sum(abs(a) ** 2 for a in self.alpha)

    def _gram(self) -> np.ndarray:
        omega = np.array(self.rotations)
        return np.exp(self.r_tilde_sq * (np.outer(omega.conj(), omega) - 1.0))

    def norm_squared(self) -> float:
        w = np.array(self.weights)
        return float(np.real(w.conj() @ self._gram() @ w))

    def normalized(self, eps: float = DEGENERACY_EPS) -> CoherentSuperposition:
        norm2 = self.norm_squared()
        if norm2 <= eps:
            raise DegenerateSuperpositionError(
                f"Superposition has squared norm {norm2:.3e}"
            )
        scale = 1.0 / math.sqrt(norm2)
        return CoherentSuperposition(
            self.alpha, tuple(w * scale for w in self.weights), self.rotations
        )

    def overlap(self, other: CoherentSuperposition) -> complex:
        """<self|other> from <a|b> = exp(-|a|^2/2 - |b|^2/2 + a* . b)."""
        if len(self.alpha) != len(other.alpha):
            raise SpaceMismatchError("Superpositions have different mode counts")
        a = np.array(self.alpha)
        b = np.array(other.alpha)
        dot = np.vdot(a, b)
        exponent = (
            -0.5 * self.r_tilde_sq
            - 0.5 * other.r_tilde_sq
            + np.outer(np.conj(self.rotations), other.rotations) * dot
        )
        return complex(
            np.conj(self.weights) @ np.exp(exponent) @ np.array(other.weights)
        )

    def moment(self, i: ModeIndex | int, m: int, n: int) -> complex:
        """<a_i^dagger^m a_i^n> for the normalized state."""
        mode = as_mode(i)
        mode.check(len(self.alpha))
        a = self.alpha[mode.axis]
        omega = np.array(self.rotations)
        w = np.array(self.weights)
        left = np.conj(w) * (np.conj(omega) * np.conj(a)) ** m
        right = w * (omega * a) ** n
        return complex(left @ self._gram() @ right) / self.norm_squared()

    def phase_factor(self, n_tot: int | np.ndarray) -> complex | np.ndarray:
        """sum_k w_k omega_k^n_tot, the factor multiplying coherent coefficients."""
        n = np.asarray(n_tot)
        omega = np.array(self.rotations)
        w = np.array(self.weights)
        out = (w[:, None] * omega[:, None] ** n.ravel()[None, :]).sum(axis=0)
        return complex(out[0]) if n.ndim == 0 else out.reshape(n.shape)

    def total_distribution(self, n_max: int) -> np.ndarray:
        """P(n_tot = n), n = 0..n_max, for the normalized state."""
        n = np.arange(n_max + 1)
        weights = np.abs(self.phase_factor(n)) ** 2
        return poisson.pmf(n, self.r_tilde_sq) * weights / self.norm_squared()

    def to_state(self, space: SpaceConfig) -> fo.TruncatedState:
        """Truncated state; coherent components are not renormalized."""
        fo.coherent_state(self.alpha, space)  # cutoff check
        factor = self.phase_factor(fo.total_occupation(space))
        coeffs = fo.coherent_coefficients(self.alpha, space) * factor
        return fo.TruncatedState(space, coeffs)


def _alpha(alpha: Sequence[complex]) -> tuple[complex, ...]:
    amps = tuple(complex(a) for a in alpha)
    if not amps:
        raise ValueError("alpha must have at least one component")
    return amps


def spnr_bg_superposition(
    alpha: Sequence[complex],
    coeffs: SpnrCoeffs,
    tol: float = NORMALIZATION_TOL,
    eps: float = DEGENERACY_EPS,
) -> CoherentSuperposition:
    amps = _alpha(alpha)
    value = coeffs.norm_condition(amps)
    if value <= eps:
        raise DegenerateSuperpositionError(
            f"C+|a> + C-|-a> has squared norm {value:.3e}"
        )
    if abs(value - 1.0) > tol:
        raise NormalizationError(f"Norm condition gives {value!r}, expected 1")
    return CoherentSuperposition(amps, (coeffs.c_plus, coeffs.c_minus), (1.0, -1.0))


def spnr_bg_state(
    alpha: Sequence[complex],
    coeffs: SpnrCoeffs,
    space: SpaceConfig,
    tol: float = NORMALIZATION_TOL,
    eps: float = DEGENERACY_EPS,
) -> fo.TruncatedState:
    """C+|alpha> + C-|-alpha>, a common eigenstate of every a_i a_j."""
    return spnr_bg_superposition(alpha, coeffs, tol, eps).to_state(space)


def phi_superposition(alpha: Sequence[complex], phi: float) -> CoherentSuperposition:
    return CoherentSuperposition(
        _alpha(alpha), (math.cos(phi), 1j * math.sin(phi)), (1.0, -1.0)
    )


def phi_state(
    alpha: Sequence[complex], phi: float, space: SpaceConfig
) -> fo.TruncatedState:
    """|alpha;phi> = cos(phi)|alpha> + i sin(phi)|-alpha>."""
    return phi_superposition(alpha, phi).to_state(space)


def sign_pattern(angles: Sequence[float]) -> np.ndarray:
    """Fock phase factors c_m = prod_k exp(i phi_k (-1)^floor(m / 2^(k-1))), m < 2^n."""
    period = 2 ** len(angles)
    m = np.arange(period)
    phase = np.zeros(period)
    for k, angle in enumerate(angles):
        phase += angle * (-1.0) ** (m // 2**k)
    return np.exp(1j * phase)


def multi_angle_superposition(
    alpha: Sequence[complex], angles: Sequence[float]
) -> CoherentSuperposition:
    """2^n-component superposition over the 2^n-th roots of unity.

    Weights are the discrete Fourier transform of the periodic phase pattern,
    so sum_j w_j omega_j^m = c_{m mod 2^n}.
    """
    pattern = sign_pattern(angles)
    period = pattern.size
    weights = np.fft.fft(pattern) / period
    rotations = np.exp(2j * np.pi * np.arange(period) / period)
    return CoherentSuperposition(_alpha(alpha), tuple(weights), tuple(rotations))


def multi_angle_state(
    alpha: Sequence[complex], angles: Sequence[float], space: SpaceConfig
) -> fo.TruncatedState:
    """Eigenstate of (a_i a_j)^(2^(n-1)) built from n angles; n = 0 gives |alpha>."""
    return multi_angle_superposition(alpha, angles).to_state(space)


def s_phi_apply(state: fo.TruncatedState, phi: float) -> fo.TruncatedState:
    """S(phi) = exp(i phi (-1)^n_tot)."""
    parity = (-1.0) ** fo.total_occupation(state.space)
    return state.with_coeffs(state.coeffs * np.exp(1j * phi * parity))


def tilde_normalization(
    r_tilde: float, phi: float, eps: float = DEGENERACY_EPS
) -> float:
    """N~ = [2(1 + cos(phi) e^{-2 r~^2})]^{-1/2}."""
    inner = 1.0 + math.cos(phi) * math.exp(-2.0 * r_tilde**2)
    if inner <= eps:
        raise DegenerateSuperpositionError(
            f"|alpha> + e^(i phi)|-alpha> vanishes at r~={r_tilde}, phi={phi}"
        )
    return 1.0 / math.sqrt(2.0 * inner)


def cat_normalization(
    r_tilde: float, phi: float, psi: float, eps: float = DEGENERACY_EPS
) -> float:
    """N of |alpha,phi,psi> in closed form."""
    nt = tilde_normalization(r_tilde, phi, eps)
    r2 = r_tilde**2
    inner = 1.0 + 2.0 * nt**2 * math.exp(-r2) * (
        math.cos(phi) * math.cos(r2 - phi + psi) + math.cos(r2 + phi - psi)
    )
    if inner <= eps:
        raise DegenerateSuperpositionError(
            f"|alpha,phi,psi> vanishes at r~={r_tilde}, phi={phi}, psi={psi}"
        )
    return 1.0 / math.sqrt(2.0 * inner)


def cat_phi_superposition(
    alpha: Sequence[complex], phi: float, eps: float = DEGENERACY_EPS
) -> CoherentSuperposition:
    amps = _alpha(alpha)
    r_tilde = math.sqrt(sum(abs(a) ** 2 for a in amps))
    nt = tilde_normalization(r_tilde, phi, eps)
    return CoherentSuperposition(amps, (nt, nt * cmath.exp(1j * phi)), (1.0, -1.0))


def cat_phi(
    alpha: Sequence[complex], phi: float, space: SpaceConfig
) -> fo.TruncatedState:
    """|alpha,phi> = N~(|alpha> + e^{i phi}|-alpha>)."""
    return cat_phi_superposition(alpha, phi).to_state(space)


def cat_phi_psi_superposition(
    params: CatParams, eps: float = DEGENERACY_EPS
) -> CoherentSuperposition:
    r_tilde = params.r_tilde
    phi, psi = params.phi, params.psi
    scale = cat_normalization(r_tilde, phi, psi, eps) * tilde_normalization(
        r_tilde, phi, eps
    )
    weights = (
        scale,
        scale * cmath.exp(1j * phi),
        scale * cmath.exp(1j * psi),
        scale * cmath.exp(1j * (psi - phi)),
    )
    return CoherentSuperposition(params.alpha, weights, _QUARTER_TURNS)


def cat_phi_psi(params: CatParams, space: SpaceConfig) -> fo.TruncatedState:
    """|alpha,phi,psi>, a common eigenstate of every (a_i a_j)^2."""
    return cat_phi_psi_superposition(params).to_state(space)


def sa_cat_superposition(
    alpha: Sequence[complex],
    inner: SpnrCoeffs,
    d_plus: complex,
    d_minus: complex,
    *,
    normalize: bool = False,
    tol: float = NORMALIZATION_TOL,
    eps: float = DEGENERACY_EPS,
) -> CoherentSuperposition:
    amps = _alpha(alpha)
    c_p, c_m = inner.c_plus, inner.c_minus
    d_plus, d_minus = complex(d_plus), complex(d_minus)
    sup = CoherentSuperposition(
        amps,
        (d_plus * c_p, d_plus * c_m, d_minus * c_p, d_minus * c_m),
        (1.0, -1.0, -1j, 1j),
    )
    norm2 = sup.norm_squared()
    if norm2 <= eps:
        raise DegenerateSuperpositionError(f"Squared-amplitude cat has norm {norm2:.3e}")
    if normalize:
        return sup.normalized(eps)
    if abs(norm2 - 1.0) > tol:
        raise NormalizationError(f"D+/D- normalization gives {norm2!r}, expected 1")
    return sup


def sa_cat(
    alpha: Sequence[complex],
    inner: SpnrCoeffs,
    d_plus: complex,
    d_minus: complex,
    space: SpaceConfig,
    *,
    normalize: bool = False,
    tol: float = NORMALIZATION_TOL,
) -> fo.TruncatedState:
    """D+|{alpha_i alpha_j};C+,C-> + D-|{-alpha_i alpha_j};C+,C->."""
    return sa_cat_superposition(
        alpha, inner, d_plus, d_minus, normalize=normalize, tol=tol
    ).to_state(space)


def pair_eigen_residual(
    state: fo.TruncatedState,
    alpha: Sequence[complex],
    i: ModeIndex | int,
    j: ModeIndex | int,
    power: int = 1,
) -> float:
    """||((a_i a_j)^power - (alpha_i alpha_j)^power) psi||."""
    mi, mj = as_mode(i), as_mode(j)
    eigenvalue = (complex(alpha[mi.axis]) * complex(alpha[mj.axis])) ** power
    lowered = state
    for _ in range(power):
        lowered = fo.apply_pair_lowering(lowered, mi, mj)
    return fo.residual_norm(lowered, eigenvalue * state)


def measured_pair_eigenvalues(state: fo.TruncatedState) -> np.ndarray:
    """Matrix of <a_i a_j> / <psi|psi>."""
    modes = state.space.mode_count
    norm2 = state.norm_squared()
    out = np.empty((modes, modes), dtype=complex)
    for i in range(1, modes + 1):
        for j in range(i, modes + 1):
            value = fo.inner(state, fo.apply_pair_lowering(state, i, j)) / norm2
            out[i - 1, j - 1] = out[j - 1, i - 1] = value
    return out


def phi_representation(
    state: fo.TruncatedState,
    alpha: Sequence[complex],
    phi: float,
    derivative: ModeIndex | int | None = None,
) -> complex:
    """f_Psi(alpha, phi) = sum_n prod_i alpha_i^n_i / sqrt(n_i!) e^{-i phi (-1)^n_tot} psi_n.

    With `derivative` = j the alpha_j-derivative is returned. In this
    representation a_j^dagger acts as f(alpha, phi) -> alpha_j f(alpha, -phi)
    and a_j as f(alpha, phi) -> d_j f(alpha, -phi).
    """
    amps = _alpha(alpha)
    if len(amps) != state.space.mode_count:
        raise SpaceMismatchError("alpha length does not match the space")
    cutoff = state.space.per_mode_cutoff
    profiles = [fo.single_mode_profile(a, cutoff) for a in amps]
    if derivative is not None:
        mode = as_mode(derivative)
        mode.check(len(amps))
        base = profiles[mode.axis]
        diff = np.zeros_like(base)
        diff[1:] = np.sqrt(np.arange(1, cutoff + 1)) * base[:-1]
        profiles[mode.axis] = diff
    weight = fo.product_tensor(profiles)
    parity = (-1.0) ** fo.total_occupation(state.space)
    return complex(np.sum(weight * np.exp(-1j * phi * parity) * state.coeffs))


