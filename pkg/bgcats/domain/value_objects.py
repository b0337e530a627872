"""Domain value objects.

Immutable parameter records for series, quadratures, truncated spaces and the
state families. Constructors validate their own invariants and raise
ValueError, so an instance that exists is always usable.
"""

from __future__ import annotations

import cmath
import dataclasses
import math
from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum

from bgcats.domain.errors import DegenerateSuperpositionError, NormalizationError

# n_max >= ceil(a*|alpha|^2 + b*|alpha| + c)
CUTOFF_RULE: tuple[float, float, float] = (1.0, 8.0, 15.0)


def adaptive_cutoff(amplitude: float) -> int:
    """Smallest per-mode cutoff the cutoff rule accepts for |alpha| = amplitude."""
    a, b, c = CUTOFF_RULE
    r = abs(float(amplitude))
    return int(math.ceil(a * r * r + b * r + c))


def _complex_tuple(values: Iterable[complex]) -> tuple[complex, ...]:
    out = tuple(complex(v) for v in values)
    for v in out:
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            raise ValueError(f"Non-finite amplitude: {v}")
    return out


class QuadratureScheme(str, Enum):
    """Node families available to the quadrature engine."""

    RADIAL_EXPONENTIAL_WEIGHTED = "radial-exponential-weighted"
    UNIFORM_ANGULAR = "uniform-angular"
    TANH_SINH = "tanh-sinh"


@dataclass(frozen=True)
class SeriesControl:
    """Stopping rule for power series."""

    rel_tol: float = 1e-12
    max_terms: int = 500

    def __post_init__(self) -> None:
        if not self.rel_tol > 0:
            raise ValueError(f"rel_tol must be positive, got {self.rel_tol}")
        if self.max_terms < 1:
            raise ValueError(f"max_terms must be >= 1, got {self.max_terms}")


@dataclass(frozen=True)
class QuadratureSpec:
    """Quadrature parameters.

    node_count seeds the first pass (or fixes the grid for schemes that do not
    refine); step-halving schemes refine up to max_refinements times until two
    passes agree to rel_tol.
    """

    node_count: int = 64
    scheme: QuadratureScheme = QuadratureScheme.TANH_SINH
    rel_tol: float = 1e-12
    max_refinements: int = 12

    def __post_init__(self) -> None:
        if self.node_count < 2:
            raise ValueError(f"node_count must be >= 2, got {self.node_count}")
        if not self.rel_tol > 0:
            raise ValueError(f"rel_tol must be positive, got {self.rel_tol}")
        if self.max_refinements < 0:
            raise ValueError("max_refinements must be non-negative")


@dataclass(frozen=True)
class SpaceConfig:
    """Truncated multimode Fock space: occupations 0..per_mode_cutoff per mode."""

    mode_count: int
    per_mode_cutoff: int
    max_dimension: int = 4_000_000

    def __post_init__(self) -> None:
        if self.mode_count < 1:
            raise ValueError(f"mode_count must be >= 1, got {self.mode_count}")
        if self.per_mode_cutoff < 1:
            raise ValueError(
                f"per_mode_cutoff must be >= 1, got {self.per_mode_cutoff}"
            )
        if self.dimension > self.max_dimension:
            raise ValueError(
                f"Basis dimension {self.dimension} exceeds {self.max_dimension}"
            )

    @property
    def shape(self) -> tuple[int, ...]:
        return (self.per_mode_cutoff + 1,) * self.mode_count

    @property
    def dimension(self) -> int:
        return (self.per_mode_cutoff + 1) ** self.mode_count

    @classmethod
    def adaptive(
        cls, alpha: Iterable[complex], mode_count: int | None = None
    ) -> SpaceConfig:
        """Space whose cutoff satisfies the cutoff rule for amplitude |alpha|."""
        amps = _complex_tuple(alpha)
        norm = math.sqrt(sum(abs(a) ** 2 for a in amps))
        return cls(
            mode_count=mode_count if mode_count is not None else len(amps),
            per_mode_cutoff=adaptive_cutoff(norm),
        )


@dataclass(frozen=True)
class ModeIndex:
    """One-based mode label i of a_i."""

    i: int

    def __post_init__(self) -> None:
        if self.i < 1:
            raise ValueError(f"Mode index must be >= 1, got {self.i}")

    @property
    def axis(self) -> int:
        return self.i - 1

    def check(self, mode_count: int) -> None:
        if self.i > mode_count:
            raise ValueError(f"Mode index {self.i} out of range 1..{mode_count}")


def as_mode(i: ModeIndex | int) -> ModeIndex:
    return i if isinstance(i, ModeIndex) else ModeIndex(int(i))


class Realization(str, Enum):
    """Boson realizations of su(1,1)."""

    ONE_MODE = "one-mode"
    TWO_MODE = "two-mode"
    ABSTRACT = "abstract"


@dataclass(frozen=True)
class BgLabel:
    """Eigenvalue z of K_- and Bargman index k.

    For the two-mode realization `charge` selects the branch l = n_1 - n_2
    with |l| = 2k - 1; when omitted the l <= 0 branch is used.
    """

    z: complex
    k: float
    realization: Realization = Realization.ABSTRACT
    charge: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "z", complex(self.z))
        object.__setattr__(self, "k", float(self.k))
        k = self.k
        if self.realization is Realization.ONE_MODE:
            if k not in (0.25, 0.75):
                raise ValueError(f"One-mode realization needs k in {{1/4, 3/4}}, got {k}")
        elif self.realization is Realization.TWO_MODE:
            two_k = 2.0 * k
            if two_k < 1 or abs(two_k - round(two_k)) > 1e-12:
                raise ValueError(f"Two-mode realization needs k in {{1/2, 1, ...}}, got {k}")
            if self.charge is not None and abs(self.charge) != round(two_k) - 1:
                raise ValueError(
                    f"Charge {self.charge} inconsistent with k={k} (|l| = 2k - 1)"
                )
        elif k < 0.25:
            raise ValueError(f"Bargman index must be >= 1/4, got {k}")

    @property
    def sector_charge(self) -> int:
        """Charge l of the two-mode branch."""
        if self.charge is not None:
            return self.charge
        return -(int(round(2.0 * self.k)) - 1)


class StateFamily(str, Enum):
    """State families the statistics layer knows closed forms for."""

    COHERENT = "coherent"
    PHI_FAMILY = "phi-family"
    N_ANGLE = "n-angle"
    CAT_PHI = "cat-phi"
    CAT_PHI_PSI = "cat-phi-psi"
    SQUARED_AMPLITUDE = "sa-cat"


@dataclass(frozen=True)
class SpnrCoeffs:
    """Coefficients C+ and C- of C+|alpha> + C-|-alpha>."""

    c_plus: complex
    c_minus: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "c_plus", complex(self.c_plus))
        object.__setattr__(self, "c_minus", complex(self.c_minus))

    def norm_condition(self, alpha: Iterable[complex]) -> float:
        """|C+|^2 + |C-|^2 + 2 Re(C- C+*) exp(-2|alpha|^2)."""
        r2 = sum(abs(a) ** 2 for a in _complex_tuple(alpha))
        cross = (self.c_minus * self.c_plus.conjugate()).real
        return (
            abs(self.c_plus) ** 2
            + abs(self.c_minus) ** 2
            + 2.0 * cross * math.exp(-2.0 * r2)
        )

    @classmethod
    def paired(
        cls,
        alpha: Iterable[complex],
        c_plus: complex,
        c_minus: complex,
        *,
        normalize: bool = False,
        tol: float = 1e-10,
        eps: float = 1e-12,
    ) -> SpnrCoeffs:
        """Coefficients checked (or rescaled) against the norm condition for alpha."""
        amps = _complex_tuple(alpha)
        raw = cls(c_plus, c_minus)
        value = raw.norm_condition(amps)
        if value <= eps:
            raise DegenerateSuperpositionError(
                f"C+|a> + C-|-a> has squared norm {value:.3e}"
            )
        if normalize:
            scale = 1.0 / math.sqrt(value)
            return cls(raw.c_plus * scale, raw.c_minus * scale)
        if abs(value - 1.0) > tol:
            raise NormalizationError(f"Norm condition gives {value!r}, expected 1")
        return raw


@dataclass(frozen=True)
class CatParams:
    """Amplitudes and angles labelling a state of one of the families.

    angle_list holds phi_1..phi_n of the n-angle family; phi and psi are the
    angles of |alpha,phi> and |alpha,phi,psi> (phi doubles as the angle of the
    phi-family).
    """

    alpha: tuple[complex, ...]
    angle_list: tuple[float, ...] = ()
    phi: float = 0.0
    psi: float = 0.0
    family: StateFamily = StateFamily.CAT_PHI_PSI

    def __post_init__(self) -> None:
        amps = _complex_tuple(self.alpha)
        if not amps:
            raise ValueError("alpha must have at least one component")
        angles = tuple(float(a) for a in self.angle_list)
        for value in (*angles, self.phi, self.psi):
            if not math.isfinite(value):
                raise ValueError(f"Angles must be finite, got {value}")
        object.__setattr__(self, "alpha", amps)
        object.__setattr__(self, "angle_list", angles)
        object.__setattr__(self, "phi", float(self.phi))
        object.__setattr__(self, "psi", float(self.psi))
        object.__setattr__(self, "family", StateFamily(self.family))

    @property
    def mode_count(self) -> int:
        return len(self.alpha)

    @property
    def r_tilde(self) -> float:
        return math.sqrt(sum(abs(a) ** 2 for a in self.alpha))

    def r(self, i: ModeIndex | int) -> float:
        mode = as_mode(i)
        mode.check(self.mode_count)
        return abs(self.alpha[mode.axis])

    def theta(self, i: ModeIndex | int) -> float:
        mode = as_mode(i)
        mode.check(self.mode_count)
        return cmath.phase(self.alpha[mode.axis])

    def replace(self, **changes: object) -> CatParams:
        return dataclasses.replace(self, **changes)  # type: ignore[arg-type]

    @classmethod
    def from_radii(
        cls,
        r_tilde: float,
        r_i: float,
        theta: float = 0.0,
        phi: float = 0.0,
        psi: float = 0.0,
        family: StateFamily = StateFamily.CAT_PHI_PSI,
    ) -> CatParams:
        """Mode 1 carries r_i e^{i theta}; any excess of r_tilde goes to a real mode 2."""
        if r_i < 0 or r_tilde < 0:
            raise ValueError("Radii must be non-negative")
        if r_i > r_tilde * (1.0 + 1e-12) + 1e-15:
            raise ValueError(f"r_i={r_i} exceeds r_tilde={r_tilde}")
        first = r_i * cmath.exp(1j * theta)
        rest2 = r_tilde * r_tilde - r_i * r_i
        alpha: tuple[complex, ...] = (first,)
        if rest2 > 1e-24:
            alpha = (first, complex(math.sqrt(rest2)))
        return cls(alpha=alpha, phi=phi, psi=psi, family=family)


@dataclass(frozen=True)
class UpqLabel:
    """Signature (p, q) and charge l of a u(p,q) sector."""

    p: int
    q: int
    l: int  # noqa: E741

    def __post_init__(self) -> None:
        if self.p < 1 or self.q < 1:
            raise ValueError(f"p and q must be >= 1, got ({self.p}, {self.q})")
        object.__setattr__(self, "l", int(self.l))

    @property
    def mode_count(self) -> int:
        return self.p + self.q

    def check(self, mode_count: int) -> None:
        if self.mode_count != mode_count:
            raise ValueError(
                f"p + q = {self.mode_count} does not match mode count {mode_count}"
            )


@dataclass(frozen=True)
class ZVector:
    """Reparametrized amplitudes z_1..z_{N-1}."""

    z: tuple[complex, ...]

    def __post_init__(self) -> None:
        amps = _complex_tuple(self.z)
        if not amps:
            raise ValueError("z must have at least one component")
        object.__setattr__(self, "z", amps)

    def __neg__(self) -> ZVector:
        return ZVector(tuple(-v for v in self.z))
