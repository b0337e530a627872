"""Resolution-of-unity checks.

A family |psi(alpha)> and a phase-independent measure resolve unity when
int dmu |psi><psi| = 1. The integral is replaced by a product grid (radial
nodes times equally spaced phases) and the resulting Gram operator
G = V^H diag(w) V is compared with the identity on a low-lying check basis.
Phase sums over M nodes are exact for the Fourier modes a check basis with
n <= n_check can produce once M > 2 n_check.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from scipy import special

from bgcats.domain.errors import DomainTooSmallError, UnknownFamilyError
from bgcats.domain.quadrature import (
    exp_sinh_rule,
    gauss_laguerre_rule,
    uniform_angles,
)
from bgcats.domain.special_fns import DEFAULT_QUADRATURE, DEFAULT_SERIES
from bgcats.domain.spnr_cats import (
    CoherentSuperposition,
    multi_angle_superposition,
    phi_superposition,
)
from bgcats.domain.su11_bg import bg_measure_density, monomial_coefficients
from bgcats.domain.upq_cs import measure_F, measure_F_closed_form, measure_F_prime
from bgcats.domain.value_objects import QuadratureSpec, SeriesControl, UpqLabel

DEFAULT_TOLERANCE = 1e-6
# Bessel-K weights are below 1e-50 past this radius for every tested order.
_BG_RADIUS_CAP = 60.0


class FamilyKind(str, Enum):
    CANONICAL = "canonical"
    PHI_FAMILY = "phi-family"
    N_ANGLE = "n-angle"
    BG_SU11 = "bg-su11"
    UPQ = "upq"


class MeasureKind(str, Enum):
    GAUSSIAN = "gaussian"
    BG = "bg"
    UPQ_Z = "upq-z"


@dataclass(frozen=True)
class FamilySpec:
    """A state family and the extent of its check basis.

    `mode_count` applies to the canonical, phi and n-angle families; the
    BG family lives on the abstract su(1,1) basis and the u(p,q) family takes
    its modes from `upq`.
    """

    kind: FamilyKind
    mode_count: int = 1
    phi: float = 0.0
    angles: tuple[float, ...] = ()
    k: float = 0.5
    upq: UpqLabel | None = None
    n_check: int = 6
    radial_nodes: int | None = None

    def __post_init__(self) -> None:
        if self.mode_count < 1:
            raise ValueError(f"mode_count must be >= 1, got {self.mode_count}")
        if self.n_check < 0:
            raise ValueError(f"n_check must be >= 0, got {self.n_check}")
        if self.kind is FamilyKind.UPQ and self.upq is None:
            raise ValueError("The u(p,q) family needs a UpqLabel")
        if self.kind is FamilyKind.BG_SU11 and self.k < 0.25:
            raise ValueError(f"Bargmann index must be >= 1/4, got {self.k}")

    @property
    def angle_count(self) -> int:
        return 2 * self.n_check + 2

    @property
    def laguerre_nodes(self) -> int:
        return self.radial_nodes if self.radial_nodes is not None else self.n_check + 2


@dataclass(frozen=True)
class MeasureDensity:
    kind: MeasureKind
    k: float = 0.5
    upq: UpqLabel | None = None

    def weight(self, r: np.ndarray, ctl: SeriesControl = DEFAULT_SERIES) -> np.ndarray:
        """Radial density of d^2 z for the non-Gaussian measures."""
        if self.kind is MeasureKind.BG:
            return np.array([bg_measure_density(float(x), self.k, ctl) for x in r])
        if self.kind is MeasureKind.UPQ_Z:
            if self.upq is None:
                raise ValueError("The z-measure needs a UpqLabel")
            return np.array(
                [measure_F_closed_form(float(x), 0.0, self.upq, ctl) for x in r]
            )
        raise ValueError("The Gaussian measure is applied through Laguerre nodes")


@dataclass(frozen=True, eq=False)
class UnityReport:
    target: str
    defect: float
    diagonal_min: float
    diagonal_max: float
    offdiag_max: float
    n_check: int
    node_count: int
    seed: int | None = None
    angles: tuple[float, ...] = field(default_factory=tuple)

    def passes(self, tol: float = DEFAULT_TOLERANCE) -> bool:
        return self.defect < tol


def _gram(vectors: np.ndarray, weights: np.ndarray) -> np.ndarray:
    return (vectors.conj().T * weights) @ vectors


def _report(
    gram: np.ndarray, target: str, spec: FamilySpec, node_count: int, tol: float,
    seed: int | None = None,
) -> UnityReport:
    diagonal = np.real(np.diag(gram))
    deviation = gram - np.eye(gram.shape[0])
    offdiag = deviation - np.diag(np.diag(deviation))
    if diagonal.min() < 1.0 - 10.0 * tol:
        raise DomainTooSmallError(
            f"Diagonal of the assembled identity drops to {diagonal.min():.6f}; "
            "the integration domain misses radial mass"
        )
    return UnityReport(
        target=target,
        defect=float(np.abs(deviation).max()),
        diagonal_min=float(diagonal.min()),
        diagonal_max=float(diagonal.max()),
        offdiag_max=float(np.abs(offdiag).max()) if gram.shape[0] > 1 else 0.0,
        n_check=spec.n_check,
        node_count=node_count,
        seed=seed,
        angles=spec.angles,
    )


def _check_basis(mode_count: int, n_check: int) -> np.ndarray:
    return np.array(list(itertools.product(range(n_check + 1), repeat=mode_count)))


def _family_phase(spec: FamilySpec) -> Callable[[np.ndarray], np.ndarray]:
    """Factor multiplying the coherent coefficients, as a function of n_tot."""
    sup: CoherentSuperposition
    if spec.kind in (FamilyKind.CANONICAL, FamilyKind.UPQ):
        return lambda n: np.ones(n.shape, dtype=complex)
    if spec.kind is FamilyKind.PHI_FAMILY:
        sup = phi_superposition([1.0], spec.phi)
    elif spec.kind is FamilyKind.N_ANGLE:
        sup = multi_angle_superposition([1.0], spec.angles)
    else:
        raise UnknownFamilyError(f"{spec.kind.value} is not a Gaussian-measure family")
    return lambda n: np.asarray(sup.phase_factor(n))


def _gaussian_gram(
    spec: FamilySpec, basis: np.ndarray
) -> tuple[np.ndarray, int]:
    """Gram operator of e^{|alpha|^2/2}-scaled family states under e^{-|alpha|^2} d^2alpha / pi^N."""
    modes = basis.shape[1]
    x, w_lag = gauss_laguerre_rule(spec.laguerre_nodes)
    theta = uniform_angles(spec.angle_count)
    # one mode: alpha = sqrt(x) e^{i theta}, d^2alpha / pi = dx dtheta / (2 pi)
    amp = np.sqrt(x)[:, None] * np.exp(1j * theta)[None, :]
    w_mode = (w_lag[:, None] / spec.angle_count * np.ones_like(theta)[None, :]).ravel()
    amp = amp.ravel()
    factorials = special.factorial(basis)
    per_mode = [
        amp[:, None] ** basis[None, :, i] / np.sqrt(factorials[None, :, i])
        for i in range(modes)
    ]
    vectors = per_mode[0]
    weights = w_mode
    for i in range(1, modes):
        vectors = (vectors[:, None, :] * per_mode[i][None, :, :]).reshape(-1, basis.shape[0])
        weights = np.multiply.outer(weights, w_mode).ravel()
    phase = _family_phase(spec)(basis.sum(axis=1))
    vectors = vectors * phase[None, :]
    return _gram(vectors, weights), weights.size


def _radial_gram(
    coefficients: Callable[[np.ndarray], np.ndarray],
    density: np.ndarray,
    r: np.ndarray,
    w_r: np.ndarray,
    angle_count: int,
) -> np.ndarray:
    """int r dr dtheta density(r) v(z) v(z)^H for monomial vectors v(z)."""
    theta = uniform_angles(angle_count)
    z = (r[:, None] * np.exp(1j * theta)[None, :]).ravel()
    weights = np.repeat(w_r * r * density, angle_count) * (2.0 * np.pi / angle_count)
    return _gram(coefficients(z), weights)


def _radial_nodes() -> tuple[np.ndarray, np.ndarray]:
    r, w = exp_sinh_rule()
    keep = r <= _BG_RADIUS_CAP
    return r[keep], w[keep]


def resolve_unity(
    spec: FamilySpec,
    measure: MeasureDensity,
    sector: int | None = None,
    tol: float = DEFAULT_TOLERANCE,
    ctl: SeriesControl = DEFAULT_SERIES,
    seed: int | None = None,
) -> UnityReport:
    """Assemble the family's identity operator and measure its defect.

    Canonical, phi and n-angle families use the Gaussian measure on
    (n_check+1)^N basis states. The BG family uses the Bessel-K measure on the
    abstract basis n = 0..n_check. The u(p,q) family targets the sector H_l:
    with the Gaussian measure for any (p, q), with the z-measure for p = q = 1.
    """
    kind = spec.kind
    if kind in (FamilyKind.CANONICAL, FamilyKind.PHI_FAMILY, FamilyKind.N_ANGLE):
        if measure.kind is not MeasureKind.GAUSSIAN:
            raise UnknownFamilyError(f"{kind.value} is resolved by the Gaussian measure")
        basis = _check_basis(spec.mode_count, spec.n_check)
        gram, count = _gaussian_gram(spec, basis)
        return _report(gram, "identity", spec, count, tol, seed)

    if kind is FamilyKind.BG_SU11:
        if measure.kind is not MeasureKind.BG:
            raise UnknownFamilyError("The BG family is resolved by the BG measure")
        r, w_r = _radial_nodes()
        density = MeasureDensity(MeasureKind.BG, spec.k).weight(r, ctl)
        n_terms = spec.n_check + 1

        def bg_vectors(z: np.ndarray) -> np.ndarray:
            return np.array([monomial_coefficients(v, spec.k, n_terms) for v in z])

        gram = _radial_gram(bg_vectors, density, r, w_r, spec.angle_count)
        return _report(gram, "identity", spec, r.size * spec.angle_count, tol, seed)

    if kind is FamilyKind.UPQ:
        assert spec.upq is not None
        label = spec.upq if sector is None else UpqLabel(spec.upq.p, spec.upq.q, sector)
        target = f"sector l={label.l}"
        if measure.kind is MeasureKind.GAUSSIAN:
            basis = _check_basis(label.mode_count, spec.n_check)
            charges = basis[:, : label.p].sum(axis=1) - basis[:, label.p :].sum(axis=1)
            in_sector = basis[charges == label.l]
            if in_sector.size == 0:
                raise DomainTooSmallError(f"No check state carries charge {label.l}")
            sector_spec = FamilySpec(FamilyKind.UPQ, label.mode_count, upq=label,
                                     n_check=spec.n_check, radial_nodes=spec.radial_nodes)
            gram, count = _gaussian_gram(sector_spec, in_sector)
            return _report(gram, target, spec, count, tol, seed)
        if measure.kind is MeasureKind.UPQ_Z:
            if (label.p, label.q) != (1, 1):
                raise UnknownFamilyError("The z-measure check supports p = q = 1")
            r, w_r = _radial_nodes()
            density = MeasureDensity(MeasureKind.UPQ_Z, upq=label).weight(r, ctl)
            span = abs(label.l)
            n1 = np.arange(spec.n_check + 1) + max(label.l, 0)
            n2 = n1 - label.l
            norms = np.sqrt(special.factorial(n1) * special.factorial(n2))

            def sector_vectors(z: np.ndarray) -> np.ndarray:
                return z[:, None] ** n1[None, :] / norms[None, :]

            gram = _radial_gram(sector_vectors, density, r, w_r,
                                2 * (spec.n_check + span) + 2)
            return _report(gram, target, spec, r.size, tol, seed)
        raise UnknownFamilyError(f"No u(p,q) check for measure {measure.kind.value}")
    raise UnknownFamilyError(f"Unknown family {kind}")


def n_angle_unity_check(
    n: int,
    angles: Sequence[float] | None = None,
    mode_count: int = 1,
    n_check: int = 6,
    seed: int = 42,
    tol: float = DEFAULT_TOLERANCE,
) -> UnityReport:
    """Resolution of unity by the n-angle family for arbitrary angles.

    Angles not given are drawn uniformly from [0, 2 pi) with the seeded
    generator; the seed and the angles are recorded in the report.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if angles is None:
        rng = np.random.default_rng(seed)
        angles = tuple(float(a) for a in rng.uniform(0.0, 2.0 * np.pi, n))
    if len(angles) != n:
        raise ValueError(f"Expected {n} angles, got {len(angles)}")
    spec = FamilySpec(
        FamilyKind.N_ANGLE, mode_count=mode_count, angles=tuple(angles), n_check=n_check
    )
    return resolve_unity(spec, MeasureDensity(MeasureKind.GAUSSIAN), tol=tol, seed=seed)


def measure_compare(
    label: UpqLabel,
    radii: Sequence[float],
    quad: QuadratureSpec = DEFAULT_QUADRATURE,
    ctl: SeriesControl = DEFAULT_SERIES,
) -> float:
    """max |F - F'| / F' over the radii, F by quadrature, F' by Bessel K."""
    if label.q != 1:
        raise ValueError(f"F and F' coincide for q = 1 only, got q={label.q}")
    deviations = []
    for r in radii:
        closed = measure_F_prime(float(r), label, ctl)
        deviations.append(abs(measure_F(float(r), 0.0, label, quad) - closed) / abs(closed))
    return max(deviations) if deviations else math.nan
