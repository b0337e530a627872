"""u(p,q) Barut-Girardello-type coherent states.

Modes 1..p and p+1..N (N = p + q) are the two halves of the signature; the
charge L = sum_{a<=p} n_a - sum_{m>p} n_m labels the sectors H_l. A coherent
state splits over sectors as |alpha> = e^{-|alpha|^2/2} sum_l ||alpha;l>, and
||alpha;l> = alpha_N^{-l} ||z;l> with
  z_b = alpha_b alpha_N   (b <= p),   z_m = alpha_m / alpha_N   (p < m < N).
The sector states have no closed-form norm for general (p, q); they are
normalized from their truncated coefficients.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from scipy import special

from bgcats.domain import fock_oracle as fo
from bgcats.domain.errors import (
    DegenerateSuperpositionError,
    DivergentIntegralError,
    EmptySectorError,
    SingularParametrizationError,
    SpaceMismatchError,
)
from bgcats.domain.quadrature import exp_power_integral
from bgcats.domain.special_fns import DEFAULT_QUADRATURE, DEFAULT_SERIES, bessel_k
from bgcats.domain.su11_bg import bg_normalization, bg_state
from bgcats.domain.value_objects import (
    BgLabel,
    QuadratureSpec,
    Realization,
    SeriesControl,
    SpaceConfig,
    SpnrCoeffs,
    UpqLabel,
    ZVector,
)

SINGULAR_ALPHA_N = 1e-12


@dataclass(frozen=True, eq=False)
class SectorTerm:
    """One term weight * |z;k> of a sector decomposition."""

    charge: int
    weight: complex
    state: fo.TruncatedState


def charge_values(space: SpaceConfig, p: int) -> np.ndarray:
    """Eigenvalue of L on every basis state."""
    return fo.charge_tensor(space, p)


def zvector_from_alpha(alpha: Sequence[complex], p: int) -> ZVector:
    amps = [complex(a) for a in alpha]
    if not 1 <= p < len(amps):
        raise ValueError(f"p must lie in 1..{len(amps) - 1}, got {p}")
    last = amps[-1]
    if abs(last) < SINGULAR_ALPHA_N:
        raise SingularParametrizationError(
            f"alpha_N = {last} cannot be absorbed into z"
        )
    head = [a * last for a in amps[:p]]
    tail = [a / last for a in amps[p:-1]]
    return ZVector(tuple(head + tail))


def _sector_mask(label: UpqLabel, space: SpaceConfig) -> np.ndarray:
    label.check(space.mode_count)
    mask = charge_values(space, label.p) == label.l
    if not mask.any():
        raise EmptySectorError(
            f"No basis state with L={label.l} below cutoff {space.per_mode_cutoff}"
        )
    return mask


def upq_unnormalized_alpha(
    alpha: Sequence[complex], label: UpqLabel, space: SpaceConfig
) -> fo.TruncatedState:
    """||alpha;l,p,q> = sum over the sector of prod alpha_i^n_i / sqrt(n_i!) |n>."""
    amps = [complex(a) for a in alpha]
    if len(amps) != space.mode_count:
        raise SpaceMismatchError("alpha length does not match the space")
    mask = _sector_mask(label, space)
    profile = fo.product_tensor(
        fo.single_mode_profile(a, space.per_mode_cutoff) for a in amps
    )
    return fo.TruncatedState(space, np.where(mask, profile, 0.0))


def upq_unnormalized_z(
    zvec: ZVector, label: UpqLabel, space: SpaceConfig
) -> fo.TruncatedState:
    """||z;l,p,q>: monomials z_1^n_1 ... z_{N-1}^n_{N-1} / sqrt(n_1! ... n_N!)."""
    if len(zvec.z) != space.mode_count - 1:
        raise SpaceMismatchError(
            f"z has {len(zvec.z)} components, expected {space.mode_count - 1}"
        )
    mask = _sector_mask(label, space)
    cutoff = space.per_mode_cutoff
    profiles = [fo.single_mode_profile(z, cutoff) for z in zvec.z]
    profiles.append(fo.single_mode_profile(1.0, cutoff))
    return fo.TruncatedState(space, np.where(mask, fo.product_tensor(profiles), 0.0))


def upq_state_z(
    zvec: ZVector, label: UpqLabel, space: SpaceConfig
) -> fo.TruncatedState:
    """Normalized |z;l,p,q>."""
    return fo.normalized(upq_unnormalized_z(zvec, label, space))


def upq_state_alpha(
    alpha: Sequence[complex], label: UpqLabel, space: SpaceConfig
) -> fo.TruncatedState:
    """Normalized |alpha;l,p,q>; needs alpha_N != 0."""
    amps = [complex(a) for a in alpha]
    if abs(amps[-1]) < SINGULAR_ALPHA_N:
        raise SingularParametrizationError(
            f"alpha_N = {amps[-1]} makes the z-chart singular"
        )
    return fo.normalized(upq_unnormalized_alpha(amps, label, space))


def pair_coherent_state(
    zeta: complex, q_charge: int, space: SpaceConfig
) -> fo.TruncatedState:
    """|zeta,q> proportional to sum_n zeta^n / sqrt(n! (n+q)!) |n+q,n>."""
    if space.mode_count != 2:
        raise SpaceMismatchError("Pair coherent states live in a two-mode space")
    span = abs(q_charge)
    coeffs = np.zeros(space.shape, dtype=complex)
    term = 1.0 / math.sqrt(math.factorial(span)) + 0j
    for n in range(space.per_mode_cutoff - span + 1):
        if n > 0:
            term *= complex(zeta) / math.sqrt(n * (n + span))
        level = (n + span, n) if q_charge >= 0 else (n, n + span)
        coeffs[level] = term
    return fo.normalized(fo.TruncatedState(space, coeffs))


def _radial_order(label: UpqLabel) -> int:
    return label.q - 1 - label.p - label.l


def measure_F(
    rp: float,
    rq: float,
    label: UpqLabel,
    quad: QuadratureSpec = DEFAULT_QUADRATURE,
) -> float:
    """F(|z_p|, |z_q|; l, p, q) by quadrature of the radial alpha_N integral.

    F = pi^(1-N) int_0^inf x^m exp(-(1 + rq^2) x - rp^2 / x) dx,
    m = q - 1 - p - l, after exact angular integration and x = |alpha_N|^2.
    """
    if rp < 0 or rq < 0:
        raise ValueError("Radii must be non-negative")
    s = _radial_order(label) + 1
    if rp == 0 and s <= 0:
        raise DivergentIntegralError(
            f"Measure weight diverges at |z_p| = 0 for l={label.l}, "
            f"p={label.p}, q={label.q}"
        )
    value = exp_power_integral(float(s), 1.0 + rq * rq, rp * rp, quad)
    return math.pi ** (1 - label.mode_count) * value.real


def measure_F_closed_form(
    rp: float,
    rq: float,
    label: UpqLabel,
    ctl: SeriesControl = DEFAULT_SERIES,
) -> float:
    """Same integral through int x^(s-1) e^(-ax-b/x) dx = 2 (b/a)^(s/2) K_s(2 sqrt(ab))."""
    s = _radial_order(label) + 1
    a = 1.0 + rq * rq
    prefactor = math.pi ** (1 - label.mode_count)
    if rp == 0:
        if s <= 0:
            raise DivergentIntegralError(f"Measure weight diverges at |z_p| = 0 (s={s})")
        return prefactor * special.gamma(s) / a**s
    b = rp * rp
    return prefactor * 2.0 * (b / a) ** (0.5 * s) * bessel_k(s, 2.0 * math.sqrt(a * b), ctl)


def measure_F_prime(
    r: float, label: UpqLabel, ctl: SeriesControl = DEFAULT_SERIES
) -> float:
    """F' = 2 |z|^(1-p-l) pi^(-p) K_{1-p-l}(2|z|), valid for q = 1."""
    if label.q != 1:
        raise ValueError(f"F' is defined for q = 1, got q={label.q}")
    if not r > 0:
        raise DivergentIntegralError(f"F' is evaluated for |z| > 0, got {r}")
    order = 1 - label.p - label.l
    return 2.0 * r**order * math.pi ** (-label.p) * bessel_k(order, 2.0 * r, ctl)


def decompose_spnr(
    alpha: Sequence[complex],
    coeffs: SpnrCoeffs,
    l_max: int,
    space: SpaceConfig,
) -> list[SectorTerm]:
    """C+|alpha> + C-|-alpha> as sum_l weight_l |z = alpha_1 alpha_2; k = (1+|l|)/2>.

    Charge l = n_1 - n_2 >= 0 carries alpha_1^l, l < 0 carries alpha_2^|l|; the
    coefficient is C~_l = C+ + (-1)^l C-. Terms are ordered 0, 1, -1, 2, -2, ...
    """
    amps = [complex(a) for a in alpha]
    if len(amps) != 2 or space.mode_count != 2:
        raise SpaceMismatchError("The u(1,1) decomposition needs two modes")
    alpha1, alpha2 = amps
    z = alpha1 * alpha2
    damping = math.exp(-0.5 * (abs(alpha1) ** 2 + abs(alpha2) ** 2))
    terms: list[SectorTerm] = []
    charges = [0] + [c for span in range(1, l_max + 1) for c in (span, -span)]
    for charge in charges:
        span = abs(charge)
        k = 0.5 * (span + 1)
        c_tilde = coeffs.c_plus + (-1) ** span * coeffs.c_minus
        branch = alpha1 if charge >= 0 else alpha2
        weight = damping * c_tilde * branch**span / bg_normalization(z, k)
        label = BgLabel(z, k, Realization.TWO_MODE, charge)
        terms.append(SectorTerm(charge, complex(weight), bg_state(label, space)))
    return terms


def resum_sectors(terms: Sequence[SectorTerm]) -> fo.TruncatedState:
    if not terms:
        raise ValueError("Nothing to re-sum")
    total = terms[0].weight * terms[0].state
    for term in terms[1:]:
        total = total + term.weight * term.state
    return total


def cross_pair_eigenvalue(zvec: ZVector, p: int, gamma: int, mu: int) -> complex:
    """Eigenvalue of a_mu a_gamma (gamma <= p < mu) on |z;l,p,q>."""
    modes = len(zvec.z) + 1
    if not (1 <= gamma <= p < mu <= modes):
        raise ValueError(f"Need 1 <= gamma <= p < mu <= {modes}, got ({gamma}, {mu})")
    z_gamma = zvec.z[gamma - 1]
    return z_gamma if mu == modes else z_gamma * zvec.z[mu - 1]


def upq_cat(
    zvec: ZVector,
    label: UpqLabel,
    d_plus: complex,
    d_minus: complex,
    space: SpaceConfig,
    eps: float = 1e-12,
) -> fo.TruncatedState:
    """Normalized D+|z;l,p,q> + D-|-z;l,p,q>."""
    plus = upq_state_z(zvec, label, space)
    minus = upq_state_z(-zvec, label, space)
    combined = complex(d_plus) * plus + complex(d_minus) * minus
    if combined.norm_squared() <= eps:
        raise DegenerateSuperpositionError(
            f"D+|z> + D-|-z> vanishes for D+={d_plus}, D-={d_minus}"
        )
    return fo.normalized(combined)


def sector_resummation(
    alpha: Sequence[complex], p: int, q: int, l_cut: int, space: SpaceConfig
) -> fo.TruncatedState:
    """e^{-|alpha|^2/2} sum_{|l| <= l_cut} ||alpha;l,p,q>."""
    amps = [complex(a) for a in alpha]
    charges = charge_values(space, p)
    total = np.zeros(space.shape, dtype=complex)
    for l in range(-l_cut, l_cut + 1):  # noqa: E741
        if not (charges == l).any():
            continue
        total += upq_unnormalized_alpha(amps, UpqLabel(p, q, l), space).coeffs
    damping = math.exp(-0.5 * sum(abs(a) ** 2 for a in amps))
    return fo.TruncatedState(space, damping * total)
