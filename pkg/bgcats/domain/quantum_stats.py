"""Squeezing and photon statistics of the cat families.

Closed forms come either from the explicit |alpha,phi,psi> moment formulas or
from the generic coherent-superposition moments; the same quantities can be
measured on any TruncatedState for cross-checks.

Quadratures (vacuum values in brackets):
  q = (a + a^+)/sqrt2, p = -i(a - a^+)/sqrt2                  [1/2]
  X = (a^2 + a^+2)/sqrt2, Y = -i(a^2 - a^+2)/sqrt2            [1]
  X_ij, Y_ij the same with a_i a_j in place of a^2.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from bgcats.domain import fock_oracle as fo
from bgcats.domain.errors import (
    TruncationMassError,
    UnknownFamilyError,
    VacuumStateError,
)
from bgcats.domain.fock_oracle import Ladder
from bgcats.domain.spnr_cats import (
    CoherentSuperposition,
    cat_normalization,
    cat_phi_psi_superposition,
    cat_phi_superposition,
    multi_angle_superposition,
    phi_superposition,
    tilde_normalization,
)
from bgcats.domain.value_objects import (
    CatParams,
    ModeIndex,
    SpaceConfig,
    StateFamily,
    adaptive_cutoff,
    as_mode,
)

Q_ZERO_BAND = 1e-3
TRUNCATION_TOL = 1e-8
_ANGLE_EPS = 1e-9


class Nonclassicality(str, Enum):
    CLASSICAL = "classical"
    WEAK = "weak"
    STRONG = "strong"
    UNDETERMINED = "undetermined"


class DistributionScope(str, Enum):
    TOTAL = "total"
    PER_MODE = "per-mode"
    CONDITIONAL = "mode-conditional"


class QuadratureTarget(str, Enum):
    AMPLITUDE = "amplitude"
    SQUARED_AMPLITUDE = "squared-amplitude"
    PAIR = "pair"


@dataclass(frozen=True)
class MomentRecord:
    """Single-mode moments <a>, <a^+a>, <a^2>, <a^+2 a^2>, <a^4> and <n_tot>."""

    mean_a: complex
    mean_n: float
    mean_a2: complex
    mean_ad2a2: float
    mean_a4: complex
    total_n: float


@dataclass(frozen=True, eq=False)
class PhotonDistribution:
    probabilities: np.ndarray
    tail_mass: float

    @property
    def mean(self) -> float:
        n = np.arange(self.probabilities.size)
        return float(n @ self.probabilities)


@dataclass(frozen=True)
class QuadraturePair:
    target: QuadratureTarget
    i: int = 1
    j: int | None = None

    def __post_init__(self) -> None:
        as_mode(self.i)
        if self.j is not None:
            as_mode(self.j)
        if self.target is QuadratureTarget.PAIR and self.j is None:
            raise ValueError("Pair quadratures need two mode indices")


@dataclass(frozen=True, eq=False)
class RobertsonResult:
    sigma: np.ndarray
    commutator: np.ndarray
    det_sigma: float
    det_commutator: float


@dataclass(frozen=True)
class ModeStats:
    """Moments, quadrature variances and Mandel Q of one mode."""

    mode: int
    moments: MomentRecord
    var_p: float
    var_q: float
    var_x: float
    var_y: float
    mandel_q: float


@dataclass(frozen=True, eq=False)
class StatsReport:
    """Diagnostics of one state at one parameter point.

    mandel_q belongs to the total photon-number distribution; each ModeStats
    carries the Q of its own mode.
    """

    modes: tuple[ModeStats, ...]
    total_n: float
    mandel_q: float
    q_near_zero: bool
    distribution: PhotonDistribution
    l_n: np.ndarray
    oscillating: bool
    nonclassicality: Nonclassicality
    warnings: list[str] = field(default_factory=list)

    def mode(self, i: ModeIndex | int) -> ModeStats:
        index = as_mode(i)
        index.check(len(self.modes))
        return self.modes[index.i - 1]


# ---------------------------------------------------------------- moments


def family_superposition(params: CatParams) -> CoherentSuperposition:
    """The coherent-state superposition a CatParams describes."""
    family = params.family
    if family is StateFamily.COHERENT:
        return CoherentSuperposition(params.alpha, (1.0,), (1.0,))
    if family is StateFamily.PHI_FAMILY:
        return phi_superposition(params.alpha, params.phi)
    if family is StateFamily.N_ANGLE:
        return multi_angle_superposition(params.alpha, params.angle_list)
    if family is StateFamily.CAT_PHI:
        return cat_phi_superposition(params.alpha, params.phi)
    if family is StateFamily.CAT_PHI_PSI:
        return cat_phi_psi_superposition(params)
    raise UnknownFamilyError(
        f"Family {family.value} needs explicit superposition coefficients"
    )


def superposition_moments(sup: CoherentSuperposition, i: ModeIndex | int) -> MomentRecord:
    total = sum(sup.moment(k, 1, 1).real for k in range(1, len(sup.alpha) + 1))
    return MomentRecord(
        mean_a=sup.moment(i, 0, 1),
        mean_n=sup.moment(i, 1, 1).real,
        mean_a2=sup.moment(i, 0, 2),
        mean_ad2a2=sup.moment(i, 2, 2).real,
        mean_a4=sup.moment(i, 0, 4),
        total_n=total,
    )


def moments_closed_form(params: CatParams, i: ModeIndex | int = 1) -> MomentRecord:
    """Moments of mode i; explicit formulas for |alpha,phi,psi>."""
    if params.family is not StateFamily.CAT_PHI_PSI:
        return superposition_moments(family_superposition(params), i)
    mode = as_mode(i)
    mode.check(params.mode_count)
    a = params.alpha[mode.axis]
    r2_i = abs(a) ** 2
    rt2 = params.r_tilde**2
    phi, psi = params.phi, params.psi
    n_cat = cat_normalization(params.r_tilde, phi, psi)
    n_tilde = tilde_normalization(params.r_tilde, phi)
    scale = n_cat**2 * n_tilde**2
    decay = math.exp(-rt2)
    x1 = rt2 - phi + psi
    x2 = rt2 + phi - psi
    intensity = 1.0 - math.cos(phi) * decay**2 - decay * (
        math.cos(phi) * math.sin(x1) + math.sin(x2)
    )
    mean_a = (
        -2.0 * a * scale * decay * math.sin(phi) * (1 + 1j)
        * (decay + math.cos(x1) + math.sin(x1))
    )
    mean_a2 = -4j * a * a * scale * decay * (math.cos(phi) * math.sin(x1) - math.sin(x2))
    return MomentRecord(
        mean_a=complex(mean_a),
        mean_n=4.0 * r2_i * scale * intensity,
        mean_a2=complex(mean_a2),
        mean_ad2a2=r2_i**2 * (4.0 * n_cat**2 - 1.0),
        mean_a4=a**4,
        total_n=4.0 * rt2 * scale * intensity,
    )


def moments_from_state(state: fo.TruncatedState, i: ModeIndex | int = 1) -> MomentRecord:
    """Oracle moments of mode i, normalized by <psi|psi>."""
    mode = as_mode(i)
    norm2 = state.norm_squared()

    def mean(word: list[tuple[Ladder, ModeIndex]]) -> complex:
        return fo.expectation(state, word) / norm2

    lower = (Ladder.LOWER, mode)
    raise_ = (Ladder.RAISE, mode)
    total = sum(
        mean([(Ladder.RAISE, ModeIndex(k)), (Ladder.LOWER, ModeIndex(k))]).real
        for k in range(1, state.space.mode_count + 1)
    )
    return MomentRecord(
        mean_a=mean([lower]),
        mean_n=mean([raise_, lower]).real,
        mean_a2=mean([lower, lower]),
        mean_ad2a2=mean([raise_, raise_, lower, lower]).real,
        mean_a4=mean([lower, lower, lower, lower]),
        total_n=total,
    )


def field_intensity(params: CatParams) -> float:
    """<n_tot>."""
    return moments_closed_form(params, 1).total_n


# -------------------------------------------------------------- variances


def variances_pq(m: MomentRecord) -> tuple[float, float]:
    var_p = 0.5 + m.mean_n - m.mean_a2.real - 2.0 * m.mean_a.imag**2
    var_q = 0.5 + m.mean_n + m.mean_a2.real - 2.0 * m.mean_a.real**2
    return var_p, var_q


def variances_xy(m: MomentRecord) -> tuple[float, float]:
    base = 1.0 + 2.0 * m.mean_n + m.mean_ad2a2
    var_x = base + m.mean_a4.real - 2.0 * m.mean_a2.real**2
    var_y = base - m.mean_a4.real - 2.0 * m.mean_a2.imag**2
    return var_x, var_y


def variance_pq(params: CatParams, i: ModeIndex | int = 1) -> tuple[float, float]:
    """(Delta^2 p_i, Delta^2 q_i) in closed form."""
    return variances_pq(moments_closed_form(params, i))


def variance_xy(params: CatParams, i: ModeIndex | int = 1) -> tuple[float, float]:
    """(Delta^2 X_i, Delta^2 Y_i) in closed form."""
    return variances_xy(moments_closed_form(params, i))


def variance_pq_from_state(state: fo.TruncatedState, i: ModeIndex | int = 1) -> tuple[float, float]:
    return variances_pq(moments_from_state(state, i))


def variance_xy_from_state(state: fo.TruncatedState, i: ModeIndex | int = 1) -> tuple[float, float]:
    return variances_xy(moments_from_state(state, i))


def min_over_interval(
    fn: Callable[[float], float], lo: float, hi: float, points: int = 721
) -> tuple[float, float]:
    """Global minimum of fn on [lo, hi]: grid scan, then bounded refinement."""
    grid = np.linspace(lo, hi, points)
    values = np.array([fn(float(t)) for t in grid])
    best = int(np.argmin(values))
    left = grid[max(best - 1, 0)]
    right = grid[min(best + 1, points - 1)]
    result = minimize_scalar(fn, bounds=(left, right), method="bounded",
                             options={"xatol": 1e-10})
    if result.success and result.fun <= values[best]:
        return float(result.x), float(result.fun)
    return float(grid[best]), float(values[best])


def min_over_theta(
    fn: Callable[[float], float], period: float = math.pi
) -> tuple[float, float]:
    """Minimum over one period of a theta-dependence."""
    return min_over_interval(fn, 0.0, period)


def joint_squeezing_windows(
    r: float,
    theta: float,
    phi: float,
    psi_lo: float,
    psi_hi: float,
    steps: int = 2001,
) -> list[tuple[float, float]]:
    """psi-intervals where Delta^2 X_i < 1 and 2 Delta^2 p_i < 1 at r~ = r_i = r."""

    def excess(psi: float) -> float:
        params = CatParams.from_radii(r, r, theta, phi, psi)
        m = moments_closed_form(params, 1)
        var_p, _ = variances_pq(m)
        var_x, _ = variances_xy(m)
        return max(var_x - 1.0, 2.0 * var_p - 1.0)

    grid = np.linspace(psi_lo, psi_hi, steps)
    values = np.array([excess(float(t)) for t in grid])
    inside = values < 0.0
    windows: list[tuple[float, float]] = []
    start: float | None = float(grid[0]) if inside[0] else None
    for k in range(1, steps):
        if inside[k] and not inside[k - 1]:
            start = brentq(excess, grid[k - 1], grid[k], xtol=1e-12)
        elif inside[k - 1] and not inside[k]:
            end = brentq(excess, grid[k - 1], grid[k], xtol=1e-12)
            windows.append((float(start), float(end)))  # type: ignore[arg-type]
            start = None
    if start is not None:
        windows.append((float(start), float(grid[-1])))
    return windows


# ---------------------------------------------------------- distributions


def s_n_phi(n: int | np.ndarray, phi: float) -> float | np.ndarray:
    """s_n(phi) = 2(1 + (-1)^n cos phi)."""
    return 2.0 * (1.0 + (-1.0) ** np.asarray(n) * math.cos(phi))


def s_n_phi_psi(n: int | np.ndarray, phi: float, psi: float) -> float | np.ndarray:
    """s_n(phi,psi) = |1 + (-1)^n e^{i phi} + i^n e^{i psi} + (-i)^n e^{i(psi-phi)}|^2."""
    n = np.asarray(n)
    total = (
        1.0
        + (-1.0) ** n * np.exp(1j * phi)
        + (1j) ** n * np.exp(1j * psi)
        + (-1j) ** n * np.exp(1j * (psi - phi))
    )
    return np.abs(total) ** 2


def _checked(probabilities: np.ndarray, truncation_tol: float) -> PhotonDistribution:
    probabilities = np.clip(np.real(probabilities), 0.0, None)
    tail = max(0.0, 1.0 - float(probabilities.sum()))
    if tail > truncation_tol:
        raise TruncationMassError(
            f"Distribution misses mass {tail:.3e} above n={probabilities.size - 1}"
        )
    return PhotonDistribution(probabilities, tail)


def photon_distribution(
    source: CatParams | fo.TruncatedState,
    scope: DistributionScope = DistributionScope.TOTAL,
    i: ModeIndex | int = 1,
    fixed: dict[int, int] | None = None,
    n_max: int | None = None,
    truncation_tol: float = TRUNCATION_TOL,
) -> PhotonDistribution:
    """Total, per-mode or conditional photon-number distribution.

    Total distributions of CatParams use the closed form; the other scopes and
    all TruncatedState inputs are read off the Fock coefficients.
    """
    scope = DistributionScope(scope)
    if isinstance(source, CatParams):
        if scope is DistributionScope.TOTAL:
            cutoff = n_max if n_max is not None else adaptive_cutoff(source.r_tilde)
            sup = family_superposition(source)
            return _checked(sup.total_distribution(cutoff), truncation_tol)
        space = SpaceConfig.adaptive(source.alpha)
        source = family_superposition(source).to_state(space)
    state = source
    norm2 = state.norm_squared()
    if scope is DistributionScope.TOTAL:
        probabilities = fo.total_distribution(state) / norm2
    elif scope is DistributionScope.PER_MODE:
        probabilities = fo.marginal_distribution(state, i) / norm2
    else:
        conditional = fo.conditional_distribution(state, i, fixed or {})
        return PhotonDistribution(conditional, 0.0)
    if n_max is not None:
        probabilities = probabilities[: n_max + 1]
    return _checked(probabilities, truncation_tol)


def mandel_q(source: PhotonDistribution | np.ndarray | fo.TruncatedState,
             i: ModeIndex | int | None = None) -> float:
    """Q = (Delta^2 n - <n>) / <n>.

    For a TruncatedState with mode i, Q = (<a^+2 a^2> - <n>^2) / <n>.
    """
    if isinstance(source, fo.TruncatedState):
        m = moments_from_state(source, i if i is not None else 1)
        if m.mean_n <= 0:
            raise VacuumStateError("Q is undefined for <n> = 0")
        return (m.mean_ad2a2 - m.mean_n**2) / m.mean_n
    p = source.probabilities if isinstance(source, PhotonDistribution) else np.asarray(source)
    n = np.arange(p.size)
    mean = float(n @ p)
    if mean <= 0:
        raise VacuumStateError("Q is undefined for <n> = 0")
    variance = float((n * n) @ p) - mean * mean
    return (variance - mean) / mean


def q_near_zero(q: float) -> bool:
    return abs(q) < Q_ZERO_BAND


def l_n_sequence(p: PhotonDistribution | np.ndarray) -> np.ndarray:
    """(n+1) p_{n-1} p_{n+1} - n p_n^2 for n = 1 .. len(p)-2."""
    p = p.probabilities if isinstance(p, PhotonDistribution) else np.asarray(p, dtype=float)
    n = np.arange(1, p.size - 1)
    return (n + 1) * p[:-2] * p[2:] - n * p[1:-1] ** 2


def is_oscillating(p: PhotonDistribution | np.ndarray, floor: float = 1e-14) -> bool:
    """More than one local maximum, ignoring the tail below floor * max.

    Interior zeros count, so a distribution supported on every other n
    oscillates.
    """
    p = p.probabilities if isinstance(p, PhotonDistribution) else np.asarray(p, dtype=float)
    if p.size == 0:
        return False
    kept = np.where(p > floor * p.max(), p, 0.0)
    above = np.nonzero(kept)[0]
    significant = kept[: above[-1] + 1] if above.size else kept
    padded = np.concatenate(([-np.inf], significant, [-np.inf]))
    peaks = (padded[1:-1] > padded[:-2]) & (padded[1:-1] >= padded[2:])
    return int(peaks.sum()) > 1


# --------------------------------------------------------- classification


def _multiple_of(angle: float, step: float) -> bool:
    ratio = angle / step
    return abs(ratio - round(ratio)) < _ANGLE_EPS


def classify(params: CatParams) -> Nonclassicality:
    """Weak/strong nonclassicality by the analytic results for each family."""
    family = params.family
    if family is StateFamily.COHERENT:
        return Nonclassicality.CLASSICAL
    if family is StateFamily.PHI_FAMILY:
        return _phi_family_class(params.phi)
    if family is StateFamily.N_ANGLE:
        angles = params.angle_list
        if not angles:
            return Nonclassicality.CLASSICAL
        if len(angles) == 1:
            return _phi_family_class(angles[0])
        if _multiple_of(angles[0], math.pi / 2) and all(
            _multiple_of(a, math.pi) for a in angles[1:]
        ):
            return Nonclassicality.CLASSICAL
        return Nonclassicality.UNDETERMINED
    if family is StateFamily.CAT_PHI:
        if _multiple_of(params.phi - math.pi / 2, math.pi):
            return Nonclassicality.WEAK
        return Nonclassicality.STRONG
    if family is StateFamily.CAT_PHI_PSI:
        return Nonclassicality.STRONG
    raise UnknownFamilyError(f"No classification rule for family {family.value}")


def _phi_family_class(phi: float) -> Nonclassicality:
    if _multiple_of(phi, math.pi / 2):
        return Nonclassicality.CLASSICAL
    return Nonclassicality.WEAK


# ------------------------------------------------------------- Robertson

Term = tuple[complex, tuple[tuple[Ladder, int], ...]]

_INV_SQRT2 = 1.0 / math.sqrt(2.0)


def quadrature_observables(pair: QuadraturePair) -> tuple[list[Term], list[Term]]:
    """Hermitian quadrature pair as lists of (coefficient, ladder word)."""
    i = pair.i
    if pair.target is QuadratureTarget.AMPLITUDE:
        low: tuple[tuple[Ladder, int], ...] = ((Ladder.LOWER, i),)
        high: tuple[tuple[Ladder, int], ...] = ((Ladder.RAISE, i),)
    else:
        j = i if pair.target is QuadratureTarget.SQUARED_AMPLITUDE else pair.j
        assert j is not None
        low = ((Ladder.LOWER, i), (Ladder.LOWER, j))
        high = ((Ladder.RAISE, i), (Ladder.RAISE, j))
    first = [(_INV_SQRT2 + 0j, low), (_INV_SQRT2 + 0j, high)]
    second = [(-1j * _INV_SQRT2, low), (1j * _INV_SQRT2, high)]
    return first, second


def _observable_mean(
    state: fo.TruncatedState, terms: Sequence[Term], truncation_tol: float
) -> complex:
    total = 0j
    for coefficient, word in terms:
        applied = fo.apply_word(state, word)
        dropped = applied.truncation_loss - state.truncation_loss
        if dropped > truncation_tol:
            raise TruncationMassError(
                f"Word {word} pushes mass {dropped:.3e} past the cutoff"
            )
        total += coefficient * fo.inner(state, applied)
    return total / state.norm_squared()


def _product(a: Sequence[Term], b: Sequence[Term]) -> list[Term]:
    return [(ca * cb, wa + wb) for ca, wa in a for cb, wb in b]


def robertson_matrices(
    state: fo.TruncatedState,
    pairs: Sequence[QuadraturePair],
    truncation_tol: float = TRUNCATION_TOL,
) -> RobertsonResult:
    """Second-moment matrix sigma and mean-commutator matrix C = (-i/2)<[A_j, A_k]>."""
    observables: list[list[Term]] = []
    for pair in pairs:
        first, second = quadrature_observables(pair)
        observables.extend([first, second])
    size = len(observables)
    means = [_observable_mean(state, obs, truncation_tol).real for obs in observables]
    sigma = np.empty((size, size))
    commutator = np.empty((size, size))
    for j in range(size):
        for k in range(size):
            product = _observable_mean(
                state, _product(observables[j], observables[k]), truncation_tol
            )
            sigma[j, k] = product.real - means[j] * means[k]
            commutator[j, k] = product.imag
    return RobertsonResult(
        sigma=sigma,
        commutator=commutator,
        det_sigma=float(np.linalg.det(sigma)),
        det_commutator=float(np.linalg.det(commutator)),
    )


def pair_variances(
    state: fo.TruncatedState, i: int, j: int, truncation_tol: float = TRUNCATION_TOL
) -> tuple[float, float, float]:
    """(Delta^2 X_ij, Delta^2 Y_ij, cov(X_ij, Y_ij)) measured on the state."""
    result = robertson_matrices(
        state, [QuadraturePair(QuadratureTarget.PAIR, i, j)], truncation_tol
    )
    return (
        float(result.sigma[0, 0]),
        float(result.sigma[1, 1]),
        float(result.sigma[0, 1]),
    )


# ---------------------------------------------------------------- report


def mode_stats(params: CatParams, i: ModeIndex | int) -> ModeStats:
    """Closed-form statistics of mode i. Q is NaN for an empty mode."""
    moments = moments_closed_form(params, i)
    var_p, var_q = variances_pq(moments)
    var_x, var_y = variances_xy(moments)
    if moments.mean_n > 0:
        q = (moments.mean_ad2a2 - moments.mean_n**2) / moments.mean_n
    else:
        q = float("nan")
    return ModeStats(as_mode(i).i, moments, var_p, var_q, var_x, var_y, q)


def stats_report(params: CatParams, n_max: int | None = None) -> StatsReport:
    """Closed-form diagnostics of every mode and of the total photon number."""
    modes = tuple(mode_stats(params, i) for i in range(1, params.mode_count + 1))
    distribution = photon_distribution(params, DistributionScope.TOTAL, n_max=n_max)
    warnings = [f"mode {m.mode} empty: Q undefined" for m in modes if math.isnan(m.mandel_q)]
    try:
        q = mandel_q(distribution)
    except VacuumStateError:
        q = float("nan")
        warnings.append("vacuum: Q undefined")
    return StatsReport(
        modes=modes,
        total_n=modes[0].moments.total_n,
        mandel_q=q,
        q_near_zero=(not math.isnan(q)) and q_near_zero(q),
        distribution=distribution,
        l_n=l_n_sequence(distribution),
        oscillating=is_oscillating(distribution),
        nonclassicality=classify(params),
        warnings=warnings,
    )
