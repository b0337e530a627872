"""Truncated multimode Fock space.

Every state is a dense complex tensor of shape (n_max+1,)*N indexed by the
occupations (n_1, ..., n_N). Ladder operators act along one tensor axis, so
no operator matrices are ever built. States are immutable; operations return
new states. Amplitude pushed above the cutoff by `create` is dropped and its
squared norm is added to `truncation_loss`.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from enum import Enum

import numpy as np

from bgcats.domain.errors import (
    BasisIndexError,
    CutoffInadequateError,
    DegenerateSuperpositionError,
    NormalizationError,
    SpaceMismatchError,
)
from bgcats.domain.value_objects import (
    ModeIndex,
    SpaceConfig,
    adaptive_cutoff,
    as_mode,
)

MAX_WORD_LENGTH = 4


@dataclass(frozen=True, eq=False)
class TruncatedState:
    """Coefficient tensor over a truncated Fock basis."""

    space: SpaceConfig
    coeffs: np.ndarray
    truncation_loss: float = 0.0

    def __post_init__(self) -> None:
        coeffs = np.array(self.coeffs, dtype=complex)
        if coeffs.shape != self.space.shape:
            raise SpaceMismatchError(
                f"Coefficient shape {coeffs.shape} does not match space {self.space.shape}"
            )
        if not np.all(np.isfinite(coeffs)):
            raise ValueError("Coefficients must be finite")
        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)

    def norm_squared(self) -> float:
        return float(np.vdot(self.coeffs, self.coeffs).real)

    def norm(self) -> float:
        return float(np.sqrt(self.norm_squared()))

    def with_coeffs(self, coeffs: np.ndarray, extra_loss: float = 0.0) -> TruncatedState:
        return TruncatedState(self.space, coeffs, self.truncation_loss + extra_loss)

    def __add__(self, other: TruncatedState) -> TruncatedState:
        _check_space(self, other)
        return TruncatedState(
            self.space,
            self.coeffs + other.coeffs,
            self.truncation_loss + other.truncation_loss,
        )

    def __sub__(self, other: TruncatedState) -> TruncatedState:
        _check_space(self, other)
        return TruncatedState(
            self.space,
            self.coeffs - other.coeffs,
            self.truncation_loss + other.truncation_loss,
        )

    def __mul__(self, factor: complex) -> TruncatedState:
        return self.with_coeffs(self.coeffs * complex(factor))

    __rmul__ = __mul__


class Ladder(str, Enum):
    LOWER = "a"
    RAISE = "a+"


Word = Sequence[tuple[Ladder, ModeIndex | int]]


def _check_space(a: TruncatedState, b: TruncatedState) -> None:
    if a.space != b.space:
        raise SpaceMismatchError(f"States live in different spaces: {a.space} vs {b.space}")


def _axis(state: TruncatedState, i: ModeIndex | int) -> int:
    mode = as_mode(i)
    mode.check(state.space.mode_count)
    return mode.axis


def _along(factors: np.ndarray, axis: int, ndim: int) -> np.ndarray:
    shape = [1] * ndim
    shape[axis] = factors.size
    return factors.reshape(shape)


def vacuum(space: SpaceConfig) -> TruncatedState:
    return fock_state((0,) * space.mode_count, space)


def fock_state(n: Sequence[int], space: SpaceConfig) -> TruncatedState:
    """Unit vector |n_1, ..., n_N>."""
    occupation = tuple(int(v) for v in n)
    if len(occupation) != space.mode_count:
        raise SpaceMismatchError(
            f"Occupation vector has {len(occupation)} modes, space has {space.mode_count}"
        )
    if any(v < 0 or v > space.per_mode_cutoff for v in occupation):
        raise BasisIndexError(
            f"Occupation {occupation} outside 0..{space.per_mode_cutoff}"
        )
    coeffs = np.zeros(space.shape, dtype=complex)
    coeffs[occupation] = 1.0
    return TruncatedState(space, coeffs)


def single_mode_profile(amplitude: complex, cutoff: int) -> np.ndarray:
    """alpha^n / sqrt(n!) for n = 0..cutoff, without the Gaussian factor."""
    n = np.arange(1, cutoff + 1)
    ratios = np.concatenate(([1.0 + 0j], complex(amplitude) / np.sqrt(n)))
    return np.cumprod(ratios)


def product_tensor(profiles: Iterable[np.ndarray]) -> np.ndarray:
    """Outer product of per-mode coefficient vectors."""
    tensor: np.ndarray | None = None
    for profile in profiles:
        tensor = profile if tensor is None else np.multiply.outer(tensor, profile)
    if tensor is None:
        raise ValueError("At least one mode is required")
    return tensor


def coherent_coefficients(alpha: Sequence[complex], space: SpaceConfig) -> np.ndarray:
    """Exact truncated coefficients of |alpha>, not renormalized."""
    amps = [complex(a) for a in alpha]
    if len(amps) != space.mode_count:
        raise SpaceMismatchError(
            f"alpha has {len(amps)} components, space has {space.mode_count} modes"
        )
    r2 = sum(abs(a) ** 2 for a in amps)
    tensor = product_tensor(single_mode_profile(a, space.per_mode_cutoff) for a in amps)
    return np.exp(-0.5 * r2) * tensor


def coherent_state(alpha: Sequence[complex], space: SpaceConfig) -> TruncatedState:
    """Canonical coherent state |alpha_1, ..., alpha_N>."""
    amps = [complex(a) for a in alpha]
    amplitude = float(np.sqrt(sum(abs(a) ** 2 for a in amps)))
    required = adaptive_cutoff(amplitude)
    if space.per_mode_cutoff < required:
        raise CutoffInadequateError(
            f"|alpha|={amplitude:.4g} needs per-mode cutoff >= {required}, "
            f"space has {space.per_mode_cutoff}"
        )
    return TruncatedState(space, coherent_coefficients(amps, space))


def _shift(coeffs: np.ndarray, axis: int, lower: bool) -> tuple[np.ndarray, float]:
    moved = np.moveaxis(coeffs, axis, 0)
    size = moved.shape[0]
    out = np.zeros_like(moved)
    if lower:
        factors = np.sqrt(np.arange(1, size))
        out[:-1] = _along(factors, 0, moved.ndim) * moved[1:]
        lost = 0.0
    else:
        factors = np.sqrt(np.arange(1, size))
        out[1:] = _along(factors, 0, moved.ndim) * moved[:-1]
        dropped = np.sqrt(size) * moved[-1]
        lost = float(np.vdot(dropped, dropped).real)
    return np.moveaxis(out, 0, axis), lost


def annihilate(state: TruncatedState, i: ModeIndex | int) -> TruncatedState:
    coeffs, _ = _shift(state.coeffs, _axis(state, i), lower=True)
    return state.with_coeffs(coeffs)


def create(state: TruncatedState, i: ModeIndex | int) -> TruncatedState:
    coeffs, lost = _shift(state.coeffs, _axis(state, i), lower=False)
    return state.with_coeffs(coeffs, extra_loss=lost)


def apply_pair_lowering(
    state: TruncatedState, i: ModeIndex | int, j: ModeIndex | int
) -> TruncatedState:
    """E_ij = a_i a_j."""
    return annihilate(annihilate(state, j), i)


def apply_number(state: TruncatedState, i: ModeIndex | int) -> TruncatedState:
    axis = _axis(state, i)
    n = _along(np.arange(state.space.per_mode_cutoff + 1), axis, state.space.mode_count)
    return state.with_coeffs(state.coeffs * n)


def apply_word(state: TruncatedState, word: Word) -> TruncatedState:
    """Apply a product of ladder operators; the rightmost letter acts first."""
    out = state
    for letter, mode in reversed(list(word)):
        out = annihilate(out, mode) if Ladder(letter) is Ladder.LOWER else create(out, mode)
    return out


def expectation(state: TruncatedState, word: Word) -> complex:
    """<psi| word |psi> for words of at most four ladder letters."""
    if len(word) > MAX_WORD_LENGTH:
        raise ValueError(f"Words are limited to {MAX_WORD_LENGTH} letters, got {len(word)}")
    return inner(state, apply_word(state, word))


def inner(a: TruncatedState, b: TruncatedState) -> complex:
    """<a|b>, conjugate-linear in a."""
    _check_space(a, b)
    return complex(np.vdot(a.coeffs, b.coeffs))


def residual_norm(a: TruncatedState, b: TruncatedState) -> float:
    return (a - b).norm()


def normalized(state: TruncatedState, eps: float = 1e-12) -> TruncatedState:
    norm2 = state.norm_squared()
    if norm2 <= eps:
        raise DegenerateSuperpositionError(f"State has squared norm {norm2:.3e}")
    return state * (1.0 / np.sqrt(norm2))


def fidelity(a: TruncatedState, b: TruncatedState) -> float:
    """|<a|b>|^2 / (<a|a><b|b>)."""
    return abs(inner(a, b)) ** 2 / (a.norm_squared() * b.norm_squared())


def total_occupation(space: SpaceConfig) -> np.ndarray:
    """Tensor of n_tot = n_1 + ... + n_N over the basis."""
    return np.indices(space.shape).sum(axis=0)


def parity_projection(state: TruncatedState, even: bool = True) -> TruncatedState:
    """Projection onto even (or odd) total occupation."""
    mask = (total_occupation(state.space) % 2) == (0 if even else 1)
    return state.with_coeffs(np.where(mask, state.coeffs, 0.0))


def total_distribution(state: TruncatedState) -> np.ndarray:
    """P(n_tot = n) for n = 0..n_max.

    Totals above the per-mode cutoff are incomplete in a truncated basis and
    are not reported.
    """
    weights = np.abs(state.coeffs) ** 2
    counts = np.bincount(
        total_occupation(state.space).ravel(), weights=weights.ravel()
    )
    return counts[: state.space.per_mode_cutoff + 1]


def marginal_distribution(state: TruncatedState, i: ModeIndex | int) -> np.ndarray:
    axis = _axis(state, i)
    weights = np.abs(state.coeffs) ** 2
    others = tuple(k for k in range(state.space.mode_count) if k != axis)
    return weights.sum(axis=others) if others else weights


def conditional_distribution(
    state: TruncatedState, i: ModeIndex | int, fixed: Mapping[int, int]
) -> np.ndarray:
    """Distribution of n_i given the occupations of the other modes.

    `fixed` maps one-based mode indices to their occupation; modes not listed
    are summed over.
    """
    axis = _axis(state, i)
    index: list[int | slice] = [slice(None)] * state.space.mode_count
    for mode, occupation in fixed.items():
        fixed_axis = _axis(state, mode)
        if fixed_axis == axis:
            raise ValueError(f"Mode {mode} cannot be both scanned and fixed")
        if not 0 <= occupation <= state.space.per_mode_cutoff:
            raise BasisIndexError(f"Occupation {occupation} out of range")
        index[fixed_axis] = occupation
    weights = np.abs(state.coeffs[tuple(index)]) ** 2
    free_axes = [k for k in range(state.space.mode_count) if isinstance(index[k], slice)]
    position = free_axes.index(axis)
    others = tuple(k for k in range(len(free_axes)) if k != position)
    dist = weights.sum(axis=others) if others else weights
    total = float(dist.sum())
    if total <= 0.0:
        raise NormalizationError("Conditioning event has zero probability")
    return dist / total


def charge_tensor(space: SpaceConfig, p: int) -> np.ndarray:
    """Tensor of n_1 + ... + n_p - n_{p+1} - ... - n_N over the basis."""
    if not 1 <= p < space.mode_count:
        raise ValueError(f"p must lie in 1..{space.mode_count - 1}, got {p}")
    occupations = np.indices(space.shape)
    return occupations[:p].sum(axis=0) - occupations[p:].sum(axis=0)
