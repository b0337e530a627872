"""
Parameter records shared by the scan and photon services.

PointParams describes one state in the (r~, r_i, theta_i, phi, psi) parametrization
used by the presets; ScanSpec describes a one-variable sweep. Both parse
the CLI's string flags.
"""

from __future__ import annotations

import cmath
import dataclasses
import math
from dataclasses import dataclass, field

import numpy as np

from bgcats.domain.value_objects import CatParams, StateFamily

SCAN_VARIABLES = ("phi", "psi", "varphi", "r_tilde", "theta")


@dataclass(frozen=True)
class PointParams:
    """
    One parameter point.

    Without `alpha`, mode 1 carries r_i e^{i theta} and the rest of r~ sits
    in a real mode 2. With `alpha`, the vector is used as given; scanning
    r_tilde rescales it and scanning theta rotates component `mode`.
    """

    r_tilde: float = 0.5
    r_i: float | None = None
    theta: float = 0.0
    phi: float = 0.0
    psi: float = 0.0
    family: StateFamily = StateFamily.CAT_PHI_PSI
    angles: tuple[float, ...] = ()
    alpha: tuple[complex, ...] | None = None
    mode: int = 1
    modes: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", StateFamily(self.family))
        object.__setattr__(self, "angles", tuple(float(a) for a in self.angles))
        if self.modes < 0:
            raise ValueError(f"modes must be >= 0, got {self.modes}")
        if self.r_tilde < 0:
            raise ValueError(f"r_tilde must be non-negative, got {self.r_tilde}")
        if self.r_i is not None and self.r_i < 0:
            raise ValueError(f"r_i must be non-negative, got {self.r_i}")
        if self.mode < 1:
            raise ValueError(f"mode must be >= 1, got {self.mode}")

    def with_value(self, variable: str, value: float) -> PointParams:
        """Copy with one scan variable set; varphi is the phi-family angle."""
        if variable not in SCAN_VARIABLES:
            raise ValueError(
                f"Unknown scan variable {variable!r}; expected one of {SCAN_VARIABLES}"
            )
        if variable == "varphi":
            variable = "phi"
        if self.alpha is not None and variable in ("r_tilde", "theta"):
            return dataclasses.replace(self, alpha=self._moved_alpha(variable, value))
        if variable == "r_tilde" and self.r_i is not None:
            # r_i tracks r~ when both start equal
            if math.isclose(self.r_i, self.r_tilde):
                return dataclasses.replace(self, r_tilde=value, r_i=value)
        return dataclasses.replace(self, **{variable: value})

    def _moved_alpha(self, variable: str, value: float) -> tuple[complex, ...]:
        assert self.alpha is not None
        amps = list(self.alpha)
        if variable == "r_tilde":
            norm = math.sqrt(sum(abs(a) ** 2 for a in amps))
            if norm == 0:
                raise ValueError("Cannot rescale a zero amplitude vector")
            return tuple(a * value / norm for a in amps)
        axis = self.mode - 1
        if axis >= len(amps):
            raise ValueError(f"mode {self.mode} exceeds {len(amps)} components")
        amps[axis] = abs(amps[axis]) * cmath.exp(1j * value)
        return tuple(amps)

    def to_cat_params(self) -> CatParams:
        if self.alpha is not None:
            return CatParams(
                alpha=self.alpha,
                angle_list=self.angles,
                phi=self.phi,
                psi=self.psi,
                family=self.family,
            )
        r_i = self.r_tilde if self.r_i is None else self.r_i
        params = CatParams.from_radii(
            self.r_tilde, r_i, self.theta, self.phi, self.psi, self.family
        )
        if self.modes:
            params = params.replace(alpha=self._spread(params.alpha, self.modes))
        return params.replace(angle_list=self.angles) if self.angles else params

    @staticmethod
    def _spread(alpha: tuple[complex, ...], modes: int) -> tuple[complex, ...]:
        """Share the excess amplitude of mode 2 equally among modes 2..modes."""
        excess = abs(alpha[1]) if len(alpha) > 1 else 0.0
        if modes == 1:
            if excess > 0:
                raise ValueError("One mode cannot carry r_i < r_tilde")
            return alpha[:1]
        share = excess / math.sqrt(modes - 1)
        return (alpha[0],) + (complex(share),) * (modes - 1)

    @property
    def stats_mode(self) -> int:
        """Mode whose quadratures are reported."""
        return self.mode if self.alpha is not None else 1

    def bindings(self) -> dict[str, object]:
        out: dict[str, object] = {
            "family": self.family.value,
            "phi": self.phi,
            "psi": self.psi,
        }
        if self.alpha is not None:
            out["alpha"] = [[a.real, a.imag] for a in self.alpha]
            out["mode"] = self.mode
        else:
            out.update(
                r_tilde=self.r_tilde,
                r_i=self.r_tilde if self.r_i is None else self.r_i,
                theta=self.theta,
            )
        if self.angles:
            out["angles"] = list(self.angles)
        if self.modes:
            out["modes"] = self.modes
        return out


@dataclass(frozen=True)
class ScanSpec:
    variable: str
    start: float
    stop: float
    steps: int
    fixed: dict[str, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.variable not in SCAN_VARIABLES:
            raise ValueError(
                f"Unknown scan variable {self.variable!r}; expected one of {SCAN_VARIABLES}"
            )
        if self.steps < 2:
            raise ValueError(f"steps must be >= 2, got {self.steps}")
        if not self.start < self.stop:
            raise ValueError(f"start must be < stop, got {self.start} >= {self.stop}")

    def points(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.steps)

    @classmethod
    def parse(cls, text: str) -> ScanSpec:
        """Parse "var:start:stop:steps"."""
        parts = text.split(":")
        if len(parts) != 4:
            raise ValueError(f"Scan must read var:start:stop:steps, got {text!r}")
        variable, start, stop, steps = parts
        try:
            return cls(variable.strip(), float(start), float(stop), int(steps))
        except ValueError as exc:
            raise ValueError(f"Malformed scan {text!r}: {exc}") from exc


def parse_alpha(text: str) -> tuple[complex, ...]:
    """Parse "re,im;re,im;..." (an entry without a comma is real)."""
    values = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split(",")
        if len(parts) > 2:
            raise ValueError(f"Amplitude {chunk!r} must read re,im")
        re = float(parts[0])
        im = float(parts[1]) if len(parts) == 2 else 0.0
        values.append(complex(re, im))
    if not values:
        raise ValueError("Empty amplitude vector")
    return tuple(values)


def parse_angles(text: str) -> tuple[float, ...]:
    """Parse "a,b,c" in radians."""
    return tuple(float(v) for v in text.split(",") if v.strip())


def parse_fixed(text: str) -> dict[int, int]:
    """Parse "mode=count,mode=count" (1-based modes) for conditional distributions."""
    fixed: dict[int, int] = {}
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        mode, sep, count = chunk.partition("=")
        if not sep:
            raise ValueError(f"Fixed occupation {chunk!r} must read mode=count")
        fixed[int(mode)] = int(count)
    return fixed
